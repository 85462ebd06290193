"""Exception hierarchy shared by every module of the package."""


class AlphaMetricError(Exception):
    """ Base class of every error raised on purpose by alphametric """


class GraphFormatError(AlphaMetricError):
    """An edge-list input could not be turned into a valid graph.

    Parameters:
    -----------
    message: str
        What went wrong.
    line: int or None
        1-based line number of the offending input line, when known.
    """
    def __init__(self, message, line=None):
        self.message = message
        self.line = line
        if line is not None:
            message = "line {}: {}".format(line, message)
        super().__init__(message)


class MalformedHeaderError(GraphFormatError):
    pass


class MalformedEdgeError(GraphFormatError):
    pass


class VertexOutOfRangeError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


class EdgeCountError(GraphFormatError):
    """ The header announced a different number of edges than the body holds """


class DisconnectedGraphError(GraphFormatError):
    pass


class SizeCapError(AlphaMetricError):
    """A computation refused to run, or stopped, because it outgrew a configured cap.

    Parameters:
    -----------
    what: str
        Name of the guarded quantity.
    cap: int
        The configured limit.
    reached: int
        The size that was reached (or requested) when the guard fired.
    """
    def __init__(self, what, cap, reached):
        self.what = what
        self.cap = cap
        self.reached = reached
        super().__init__("{} exceeds cap: reached {} > {}".format(what, reached, cap))


class HullCapError(SizeCapError):
    def __init__(self, cap, reached):
        super().__init__("injective hull size", cap, reached)


class ParameterError(AlphaMetricError):
    """ Invalid parameter for a generator, transform or check """


class UnknownCheckError(ParameterError):
    def __init__(self, name, known):
        self.name = name
        super().__init__("unknown check id '{}' (known: {})".format(name, ", ".join(known)))


class InvariantViolation(AlphaMetricError):
    """ A result failed its own postcondition re-check """
