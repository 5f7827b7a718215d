"""
Error types raised by branchlab.

All of them are ValueErrors so callers that only know the standard library
contract keep working; the CLI maps them to exit codes.
"""


class BranchlabError(ValueError):
    """Base class for branchlab rejections"""

    exit_code = 1


class CatalogError(BranchlabError):
    """Catalog file missing, malformed or failing schema validation"""


class UnknownPairError(BranchlabError):
    """Pair identifier not present in any loaded catalog"""


class InadmissibleError(BranchlabError):
    """Discrete series parameter whose restriction is not cataloged as admissible"""

    exit_code = 2


class CutoffExceededError(BranchlabError):
    """Requested data lies beyond the computed cutoff"""

    exit_code = 3


class UnsupportedModelError(BranchlabError):
    """(g, tau) combination outside the supported polynomial or analytic models"""
