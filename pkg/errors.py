"""
Exception hierarchy shared by every package in the project.

Verification outcomes are reported through CheckReport objects, never raised;
the classes below cover bad input and broken preconditions.
"""


class GWDiffError(Exception):
    """Base class for all errors raised by this project"""


class DomainError(GWDiffError, ValueError):
    """An argument lies outside the domain of an operation (e.g. genus 0, k >= n)"""


class SeriesError(GWDiffError, ArithmeticError):
    """A series operation cannot be carried out at the requested truncation"""


class DatasetError(GWDiffError, ValueError):
    """A Gopakumar-Vafa dataset could not be parsed or validated"""


class ConsistencyError(GWDiffError):
    """Two independent construction paths that must agree produced different results"""
