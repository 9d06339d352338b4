"""
Configuration Module

This module contains configuration classes for the EET simulator.
It provides a base configuration with the numerical defaults used by the
services, and a testing configuration. Only the logging settings (level and
the optional log file) are taken from the environment, optionally through a
local ``.env`` file.
"""

import os

from dotenv import load_dotenv

load_dotenv()


class Config:
    """
    Base configuration class.

    Attributes:
        TESTING (bool): Indicates if the application is in testing mode.
        LOG_LEVEL (str): Defines the logging level.
        LOG_TO_FILE (bool): Mirror log records into a rotating file.
        VERSION (str): Application version, stamped into result sidecars.
        MAX_SITES (int): Largest site network accepted by tensor assembly.
        PV_TOLERANCE (float): Relative tolerance of principal-value quadrature.
        PV_LIMIT (int): Subinterval budget of the principal-value quadrature.
        SECULAR_GROUPING_TOL (float): Frequency tolerance (rad/ps) of the
            secular filter.
        DEFAULT_T_FINAL_PS (float): Default propagation window.
        DEFAULT_METHOD (str): Default propagation method.
        OUTPUT_INTERVAL_PS (float): Default spacing of trajectory output rows.
        MAX_DT_PS (float): Upper bound of the automatic time step.
        TRACE_DRIFT_LIMIT (float): Trace drift that aborts a propagation.
        POSITIVITY_WARN (float): Smallest eigenvalue that triggers a warning.
        POSITIVITY_FAIL (float): Smallest eigenvalue that aborts a propagation.
        SPECTRUM_GRID (tuple): Default (min, max, step) of the spectrum command.
        SCAN_WORKERS (int): Thread pool size for scale scans.
    """

    TESTING = False
    LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO")
    LOG_TO_FILE = os.environ.get("LOG_TO_FILE", "False").lower() == "true"
    LOG_FILE_PATH = os.environ.get("LOG_FILE_PATH")

    VERSION = "0.1.0"

    MAX_SITES = 10
    PV_TOLERANCE = 1e-8
    PV_LIMIT = 400
    SECULAR_GROUPING_TOL = 1e-9

    DEFAULT_T_FINAL_PS = 1000.0
    DEFAULT_METHOD = "expm"
    OUTPUT_INTERVAL_PS = 1.0
    MAX_DT_PS = 1e-3
    TRACE_DRIFT_LIMIT = 1e-6
    POSITIVITY_WARN = -1e-6
    POSITIVITY_FAIL = -1e-3

    SPECTRUM_GRID = (-5.0, 5.0, 0.01)
    SCAN_WORKERS = 4


class TestingConfig(Config):
    """
    Testing configuration class.

    Inherits from Config and sets configuration settings specific to the
    testing environment.
    """

    TESTING = True
    LOG_LEVEL = "DEBUG"
