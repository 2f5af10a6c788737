"""Configuration module for NameChar.

Loads environment variables and sets up logging.
"""

import logging
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Environment variables as module-level constants
NAMECHAR_DATA_DIR = os.getenv('NAMECHAR_DATA_DIR', 'data')
NAMECHAR_LOG_LEVEL = os.getenv('NAMECHAR_LOG_LEVEL', 'INFO')

# Dictionary ingestion
CORPUS_CONFIG = {
    "encodings": {
        "census": "ascii",
        "namdict": "latin-1",
        "custom": "utf-8",
    },
    "census_files": {
        "male": "dist.male.first",
        "female": "dist.female.first",
    },
    "namdict_file": "nam_dict.txt",
}

# Name classifier
NAMCHAR_CONFIG = {
    "engine": "logistic",
    "gamma": 0.1745521,  # best grid point reported for the nam_dict features
    "cost": 1.0,
    "gamma_grid": [0.05, 0.1, 0.1745521, 0.5, 1.0],
    "cost_grid": [0.25, 0.5, 1.0, 2.0, 4.0],
    "folds": 10,
    "repeats": 3,
    "max_names": 10000,  # SVM training subsample
}

SVM_CONFIG = {
    "tol": 1e-3,
    "max_iter": 200000,
    "platt_holdout": 0.2,
    "kernel_cache_rows": 256,
}

LOGISTIC_CONFIG = {
    "tol": 1e-8,
    "max_iter": 100,
}

# Threshold classifier
PIPELINE_CONFIG = {
    "k": 20,
    "tau": 0.85,
    "scoring": "census",
    "gamma_grid": [0.01, 0.1, 1.0],
    "cost_grid": [1.0, 10.0],
    "folds": 5,
    "repeats": 1,
    "eval_folds": 10,
    "eval_repeats": 3,
}

HISTOGRAM_CONFIG = {
    "bin_width": 0.05,
    "low": -1.0,
    "high": 1.0,
}

# Initialize basic logging to stderr (timestamped)
logging.basicConfig(
    level=getattr(logging, NAMECHAR_LOG_LEVEL.upper(), logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[logging.StreamHandler()]
)
