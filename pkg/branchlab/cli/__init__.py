"""
Command-line front end: catalog listing, branching tables, SBO classification and verification suites
"""
from branchlab.cli.main import main
from branchlab.cli.suites import SUITES, SuiteOptions, run_suite

__all__ = ["SUITES", "SuiteOptions", "main", "run_suite"]
