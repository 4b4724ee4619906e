"""Learning-rate calibration: information matching and SafeBayes."""
