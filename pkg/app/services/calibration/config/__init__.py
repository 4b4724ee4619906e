from .settings import CalibrationSettings, get_calibration_settings

__all__ = ["CalibrationSettings", "get_calibration_settings"]
