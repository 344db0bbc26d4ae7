"""Exception hierarchy.

Two families: :class:`ModelError` for malformed input text (syntax, arity,
labels) and :class:`DomainError` for well-formed requests that the algebra
refuses (a set that does not generate, an inconsistent map, ...).
"""


class UarepError(Exception):
    """Base class for every error raised by this package."""


class ModelError(UarepError):
    """Malformed model or term text."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)


class ModelSyntaxError(ModelError):
    pass


class ArityError(ModelError):
    pass


class UnknownLabel(ModelError):
    def __init__(self, label, message=None, line=None, column=None):
        self.label = label
        super().__init__(message or f"unknown label '{label}'", line, column)


class DuplicateLabel(ModelError):
    def __init__(self, label, line=None, column=None):
        self.label = label
        super().__init__(f"duplicate label '{label}'", line, column)


class DomainError(UarepError):
    """A request that is well formed but algebraically impossible."""


class RepresentationError(DomainError):
    """An action table violates the declared mode (monoid axioms, endomorphism)."""


class NotSubalgebra(DomainError):
    def __init__(self, op, operands, result):
        self.op, self.operands, self.result = op, tuple(operands), result
        super().__init__(f"{op}({', '.join(self.operands)}) = {result} leaves the subset")


class NotStable(DomainError):
    def __init__(self, a, m, result):
        self.a, self.m, self.result = a, m, result
        super().__init__(f"f({a})({m}) = {result} leaves the subset")


class NotGenerating(DomainError):
    pass


class Inconsistent(DomainError):
    def __init__(self, element, first, second):
        self.element = element
        self.first = first
        self.second = second
        super().__init__(
            f"element {element}: image {first[0]} via {first[1]} "
            f"but {second[0]} via {second[1]}"
        )


class NotMorphism(DomainError):
    pass


class NotAutomorphism(DomainError):
    pass


class BudgetExceeded(DomainError):
    pass


class SlotOutOfRange(DomainError):
    pass


class ParentMismatch(DomainError):
    pass


class NotInManifold(DomainError):
    pass


class ContextMismatch(DomainError):
    pass


class WellDefinednessFailure(DomainError):
    pass


class InvarianceViolation(DomainError):
    pass
