# -*- coding: utf-8 -*-

"""Exceptions raised by the hyperring engine.

Predicates never raise when they fail; they return a :class:`Check` or a
richer result carrying the witness. Exceptions are reserved for inputs that
the predicate is not defined on.
"""


class HyperringError(RuntimeError):
    """Base class for all errors from this package."""


class StructureError(HyperringError):
    """Malformed tables, or a constructed ring failing its axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class RingMismatchError(HyperringError):
    """Two subsets from different rings were combined."""


class EmptySubsetError(HyperringError):
    """An operation needing a nonempty subset was given an empty one."""


class NotAHyperidealError(HyperringError):
    """The subset is not a hyperideal of the ring."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotProperError(HyperringError):
    """The hyperideal is the whole ring."""


class MissingIdentityError(HyperringError):
    """The ring has no designated identity element."""


class SizeCapError(HyperringError):
    """A configured size cap would be exceeded."""


class WellDefinednessError(HyperringError):
    """The coset product depends on the choice of representatives."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotGoodHomomorphismError(HyperringError):
    """The map is not a good homomorphism."""


class UnknownTheoremError(HyperringError, KeyError):
    """No theorem with this id is registered."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class CorpusSpecError(HyperringError):
    """The corpus or family specification could not be understood."""


class RingFormatError(HyperringError):
    """A ring document could not be parsed.

    Attributes
    ----------
    diagnostics : [(int, int, str)]
        Line, column and message for every problem found.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        line, column, message = self.diagnostics[0]
        super().__init__(f"line {line}, column {column}: {message}")
