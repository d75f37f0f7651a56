"""Global numeric policy: tolerances and the default seed.

Every inequality certification uses CERT_TOL of absolute slack; closed-form
identities are held to EXACT_TOL.  All computations here are short chains of
max/min/add, so error does not accumulate and a single policy suffices.
"""

# Absolute slack for one-sided inequality certifications.
CERT_TOL = 1e-9

# Absolute slack for closed-form identities.
EXACT_TOL = 1e-12

# Required agreement between exact center routines and the numeric oracle.
ORACLE_TOL = 1e-6

# Objective-change stopping threshold for the numeric oracle.
ORACLE_STOP = 1e-10

# Default seed for every randomized component (campaigns, the enclosing-ball
# shuffle, the CLI).  Fixed so that runs are reproducible by default.
DEFAULT_SEED = 1729
