NON_CONVERGENT_OP_MSG = "{} did not converge (error estimate {:.3g})"
INSUFFICIENT_DATA_MSG = "extrapolation needs at least {} points, got {}"
NON_MONOTONE_LADDER_MSG = "extrapolation parameters must approach the limit monotonically"
BRANCH_CUT_MSG = "{} lies on the branch cut {}"
PATH_TOO_COARSE_MSG = "sampled path is too coarse: step {} has argument jump {:.6g}"
PATH_HITS_ZERO_MSG = "sampled path passes through zero at index {}"
IMAGINARY_AXIS_MSG = "point {} lies on the imaginary axis; pass side='right' to take the limit from the right"
INCONCLUSIVE_MSG = "classification inconclusive: {}"
ZERO_FUNCTION_MSG = "the zero function has no {}"
DOMAIN_VIOLATION_MSG = "{} is outside the domain of {}"
NOT_REAL_VALUE_MSG = "f(zeta) = {} is not a positive real number"
INVALID_SPEC_MSG = "invalid function spec: {}"
UNKNOWN_SPEC_KEY_MSG = "invalid function spec: unknown key '{}' for family '{}'"
UNKNOWN_FAMILY_MSG = "invalid function spec: unknown family '{}'"
SPEC_TOO_DEEP_MSG = "invalid function spec: nesting deeper than {}"
OUT_OF_RANGE_MSG = "{} = {} is out of range {}"
ALPHA_ONE_SKEWED_MSG = "alpha = 1 admits no skewness parameter beta = {} (use a = c - ib)"
ROOT_NOT_BRACKETED_MSG = "curve point not bracketed for r = {}"
NOT_BALANCED_MSG = "{} requires a balanced function (classification: {})"
TAU_ON_CUT_MSG = "tau = {} lies on (-inf, 0]"
NOT_ON_CURVE_MSG = "r = {} is not in the off-axis part of the spine"
RHO_DEGENERATE_MSG = "rho = {} is degenerate (must be in (0, 1))"
GAMMA_POLE_MSG = "Gamma has a pole at {}"
STRICTLY_DECREASING_MSG = "{} must be strictly decreasing"

NOT_POWER_OF_TWO_MSG = "{} = {} must be a power of two, at least 2"
EXPERIMENTAL_MSG = "{} evaluates a conjectured formula; pass experimental=True"
MOMENT_STRIP_MSG = "s = {} is outside the finite moment strip (0, {:.17g})"

# Cli error messages
UNKNOWN_COMMAND_MSG = "unknown command '{}', expected one of: {}"
MISSING_COMMAND_MSG = "no command given, expected one of: {}"
SYNTAX_ERROR_MSG = "syntax error near '{}'"
MISSING_FLAG_MSG = "command '{}' requires flag --{}"
INVALID_FLOAT_MSG = "value '{}' is not a valid float"
INVALID_INT_MSG = "value '{}' is not an integer"
INVALID_CHOICE_MSG = "value '{}' must be one of: {}"
INVALID_GRID_MSG = "grid '{}' must be rmin,rmax,n with 0 < rmin < rmax and n >= 2"
POSITIVE_TOLERANCE_MSG = "tolerance must be positive, got {}"
UNREADABLE_SPEC_MSG = "cannot read spec file '{}': {}"
