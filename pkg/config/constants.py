"""
Constants and configuration file
"""
import os

from dotenv import load_dotenv

load_dotenv()

# Tolerances
ANGLE_EQUALITY_TOL = 1e-12  # angle comparisons at junctions
UNITARITY_TOL = 1e-12  # entrywise |U^dagger U - I|
EIGEN_RESIDUAL_TOL = 1e-8  # ||U v - lambda v||_inf per eigenpair
UNIT_MODULUS_TOL = 1e-10
CORNER_AMPLITUDE_TOL = 1e-10
DENOMINATOR_TOL = 1e-13
ROOT_FUNCTION_TOL = 1e-12
SINGULAR_CONDITION_LIMIT = 1e12
ZERO_SPINOR_TOL = 1e-13
BAND_EDGE_TOL = 1e-9

# Dense materialization cap (sites); 2N x 2N matrices above this are refused
DENSE_CAP = int(os.getenv("QLGA_DENSE_CAP", "512"))

# Sweep grid points evaluated concurrently
SWEEP_WORKERS = int(os.getenv("QLGA_SWEEP_WORKERS", "1"))

LOG_LEVEL = os.getenv("QLGA_LOG_LEVEL", "WARNING")

# Probe lattice used to check a one-boundary eigenfunction against the operator
PROBE_LATTICE_SITES = 12

# Output formats
CSV_FLOAT_FORMAT = "%.17g"
TRAJECTORY_COLUMNS = ["t", "x", "p_minus", "p_plus", "p_total"]
SPECTRUM_COLUMNS = ["param", "index", "re_lambda", "im_lambda", "omega", "modulus", "classification"]
ROOTS_COLUMNS = ["index", "k", "omega"]
DISPERSION_COLUMNS = ["k", "omega"]
HEATMAP_MAX_GRAY = 255

# Exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NUMERIC_ERROR = 2

# Spectral classifications
IN_BAND = "in-band"
TRAPPED = "trapped"
CORNER = "corner"
