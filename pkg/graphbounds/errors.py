# coding: utf-8

"""
Special errors for graphbounds.
"""


class GraphBoundsError(Exception):
    """Base Exception for all graphbounds errors."""


class GraphError(GraphBoundsError):
    """Raised when a graph cannot be constructed as requested."""
    def __init__(self, reason, *args):
        self.reason = reason
        super().__init__(reason, *args)

    def __str__(self):
        return 'Invalid graph: {0}'.format(self.reason)


class FamilyError(GraphBoundsError):
    """Raised when a named graph family gets invalid parameters."""
    def __init__(self, kind, n, s=None, reason='', *args):
        self.kind = kind
        self.n = n
        self.s = s
        self.reason = reason
        super().__init__(kind, n, s, reason, *args)

    def __str__(self):
        msg = 'Invalid parameters for family {0} (n={1}, s={2})'
        msg = msg.format(self.kind, self.n, self.s)
        if self.reason:
            msg += ': {0}'.format(self.reason)
        return msg


class Graph6Error(GraphBoundsError):
    """Raised when a graph6 string cannot be decoded."""
    def __init__(self, text, reason, lineno=None, *args):
        self.text = text
        self.reason = reason
        self.lineno = lineno
        super().__init__(text, reason, lineno, *args)

    def __str__(self):
        if self.lineno is not None:
            msg = 'Malformed graph6 on line {0} ({1!r}): {2}'
            return msg.format(self.lineno, self.text, self.reason)
        return 'Malformed graph6 {0!r}: {1}'.format(self.text, self.reason)


class DisconnectedGraphError(GraphBoundsError):
    """Raised when an invariant is only defined for connected graphs."""
    def __init__(self, invariant, *args):
        self.invariant = invariant
        super().__init__(invariant, *args)

    def __str__(self):
        return '{0} is undefined for a disconnected graph'.format(
            self.invariant)


class ConvergenceError(GraphBoundsError):
    """Raised when the Jacobi eigensolver hits its sweep cap."""
    def __init__(self, sweeps, off_norm, residual, *args):
        self.sweeps = sweeps
        self.off_norm = off_norm
        self.residual = residual
        super().__init__(sweeps, off_norm, residual, *args)

    def __str__(self):
        msg = ('Jacobi iteration did not converge after {0} sweeps '
               '(off-diagonal norm {1:.3e}, residual {2:.3e})')
        return msg.format(self.sweeps, self.off_norm, self.residual)


class BoundDomainError(GraphBoundsError):
    """Raised when a bound is evaluated outside of its domain."""
    def __init__(self, bound, reason, *args):
        self.bound = bound
        self.reason = reason
        super().__init__(bound, reason, *args)

    def __str__(self):
        return 'Cannot evaluate {0}: {1}'.format(self.bound, self.reason)


class UnknownPredicateError(GraphBoundsError):
    """Raised when a predicate identifier is not registered."""
    def __init__(self, name, known, *args):
        self.name = name
        self.known = list(known)
        super().__init__(name, self.known, *args)

    def __str__(self):
        msg = 'Unknown predicate {0!r}; choose from: {1}'
        return msg.format(self.name, ', '.join(self.known))


class EnumerationCapError(GraphBoundsError):
    """Raised when an order exceeds what an operation supports."""
    def __init__(self, operation, n, cap, *args):
        self.operation = operation
        self.n = n
        self.cap = cap
        super().__init__(operation, n, cap, *args)

    def __str__(self):
        msg = '{0} supports 1 <= n <= {1}, got n={2}'
        return msg.format(self.operation, self.cap, self.n)


class ObjectiveSyntaxError(GraphBoundsError):
    """Raised when an objective expression cannot be parsed."""
    def __init__(self, text, position, message, *args):
        self.text = text
        self.position = position
        self.message = message
        super().__init__(text, position, message, *args)

    def __str__(self):
        msg = 'Syntax error at offset {0} in {1!r}: {2}'
        return msg.format(self.position, self.text, self.message)


class ObjectiveEvalError(GraphBoundsError):
    """Raised when an objective expression has no real value."""
    def __init__(self, text, message, *args):
        self.text = text
        self.message = message
        super().__init__(text, message, *args)

    def __str__(self):
        return 'Cannot evaluate {0!r}: {1}'.format(self.text, self.message)


class SearchError(GraphBoundsError):
    """Raised when the extremal search breaks one of its invariants."""
    def __init__(self, reason, *args):
        self.reason = reason
        super().__init__(reason, *args)

    def __str__(self):
        return 'Search failed: {0}'.format(self.reason)
