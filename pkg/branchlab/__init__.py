"""
branchlab - exact branching laws of discrete series under symmetric pairs
"""

__version__ = "0.1.0"
