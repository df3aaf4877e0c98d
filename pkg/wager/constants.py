C_MAX_SEED = 2**64 - 1
C_DEFAULT_SEED = 20240101
C_DEFAULT_RUNS = 100
C_DEFAULT_WORKERS = 1
C_DEFAULT_ALPHA = 0.1

C_TABLE_PRECISION = 4

C_NOT_ENOUGH_TRIALS = "Injected trial file must contain at least one trial"
