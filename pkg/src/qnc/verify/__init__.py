"""Identity catalog and suite runner."""

from .core import (EXTRA_SUITES, SUITES, CatalogError, Identity, IdentityResult, SuiteReport, catalog,
                   check_identity, get_identity, iter_suite, list_identities, run_identity, run_suite,
                   suite_members)

__all__ = [
    "SUITES", "EXTRA_SUITES", "CatalogError", "Identity", "IdentityResult", "SuiteReport", "catalog",
    "check_identity", "get_identity", "iter_suite", "list_identities", "run_identity", "run_suite",
    "suite_members",
]
