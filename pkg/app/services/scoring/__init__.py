"""Prequential scoring of posterior-induced predictives."""
