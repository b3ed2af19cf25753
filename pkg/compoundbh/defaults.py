"""
    compoundbh/defaults
    ~~~~~~~~~~~~~~~~~~~

    Contains commonly used default values.
"""
import os

ALPHA = 0.1
ANALYZE_ALPHAS = (0.2, 0.5)
APPROX_EPSILON = 0.0
APPROX_DELTA = 0.0
CHUNK_SIZE = 1024
C_SEQUENCE_L = 500
C_SEQUENCE_LIMIT = 1.9227
C_SEQUENCE_TOL = 1e-9
CSV_ARTICLE_COLUMN = 'clickability_test_id'
CSV_HEADLINE_COLUMN = 'headline'
CSV_IMPRESSIONS_COLUMN = 'impressions'
CSV_CLICKS_COLUMN = 'clicks'
DIGIT_MODE = 'unicode'
EXACT_CAP = 20000
GAMMA_LEVELS = (0.2, 0.5)
INGEST_MAX_BAD_FRACTION = 0.01
MC_DRAWS = 10000
METRIC = 'fdr'
MIN_HEADLINES = 0
POISSON_IDENTITY_KMAX = 100000
POISSON_IDENTITY_TAIL = 1e-10
POISSON_SWITCH_LAMBDA = 50.0
REPS = 20000
RESULT_STDOUT = ''
RESULT_STDERR = ''
RESULT_ERROR = None
SE_MULTIPLIER = 3.0
SEED = int(os.environ.get('COMPOUNDBH_SEED', 20240101))
SUITE_FUZZ_SEEDS = 100
SUITE_FUZZ_M = 50
SUITE_MAX_ATOMS = 6
THM1_CONSTANT = 1.93
THM3_ALPHAS = (0.1, 0.2, 0.3)
WEIGHT_SUM_TOL = 1e-9
WORKERS = int(os.environ.get('COMPOUNDBH_WORKERS', 1))
