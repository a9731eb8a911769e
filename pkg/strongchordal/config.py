import os


class Config(object):
    # Size limits for the exhaustive oracles (refuse beyond these)
    BRUTE_FORCE_LIMIT = 8
    DEFINITION_LIMIT = 12

    # Re-check compatibility of the representation inside deepest_root_vertex.
    # Off by default, the check is quadratic.
    CHECK_COMPATIBILITY = False

    DEFAULT_SEED = 42

    LOGGING_CONFIG = os.path.join(os.path.dirname(__file__), 'logging.ini')


# NOTE; nothing here is read from the environment. The CLI is a pure
# function of its arguments and input files, so limits are overridden per
# call (keyword arguments) rather than globally.
