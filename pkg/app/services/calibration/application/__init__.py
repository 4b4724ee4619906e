from .commands import calibration_result, run_calibrate, safebayes_result

__all__ = ["calibration_result", "run_calibrate", "safebayes_result"]
