"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │         CONFIGURATION               │
 *  └─────────────────────────────────────┘
 *  Default parameters for the WSN clustering simulator
 *
 *  Centralizes the radio, election, network and harness
 *  defaults, organized by functional area.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - Configuration constants
 *
 *  Notes:
 *  - Radio and election defaults reproduce the reference radio table
 *  - No environment variables are read; runs are configured by
 *    config files and command-line flags only
 */
"""

# =============================================================================
# RADIO CONFIGURATION
# =============================================================================
E_ELEC = 5e-9             # J/bit, transmitter/receiver electronics
EPS_FS = 10e-12           # J/bit/m^2, free-space amplifier
EPS_MP = 0.0013e-12       # J/bit/m^4, multipath amplifier
E_DA = 5e-9               # J/bit/message, data aggregation
D0 = 70.0                 # m, free-space/multipath switch distance
MESSAGE_BITS = 4000       # bits per data message (L)
INITIAL_ENERGY = 0.5      # J per node (E_0)

# =============================================================================
# ELECTION CONFIGURATION
# =============================================================================
P = 0.05                  # rotation base probability
P_OPT1 = 0.06250          # near-region CH probability
P_OPT2 = 0.03125          # far-region CH probability
C = 6.0                   # near-region distance weight

# =============================================================================
# NETWORK CONFIGURATION
# =============================================================================
NUM_NODES = 100
REGION_SIDE = 100.0       # m
BS_OFFSET = 75.0          # m, base station distance from the top edge
MAX_ROUNDS = 5000
SEED = 0
PROTOCOL = "leach"

# =============================================================================
# HARNESS CONFIGURATION
# =============================================================================
OUTPUT_DIR = "./out"
DEFAULT_SEEDS = 20
DEFAULT_PROTOCOLS = ["leach", "deleach"]
DEFAULT_C_VALUES = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10]
DEFAULT_N_VALUES = [10, 20, 30, 40, 50, 60, 70, 80, 90, 100]
TASK_WORKER_COUNT = 1     # 1 = run in-process, sequentially
LOG_LEVEL = "INFO"

# Significant digits for energies in CSV output (17 round-trips a double exactly)
CSV_ENERGY_DIGITS = 17

# =============================================================================
# APPLICATION INFO
# =============================================================================
APP_NAME = "wsnsim"
