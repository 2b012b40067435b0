"""Exception types shared across the package."""


class CfumError(Exception):
    """Base class for all package-specific errors."""


class MalformedInput(CfumError):
    """Input text or data does not match the expected format."""


class SelfLoop(MalformedInput):
    """An edge joins a vertex to itself."""


class InconsistentRotation(MalformedInput):
    """A rotation system is not symmetric: u lists v but v does not list u."""


class NotPlane(CfumError):
    """A rotation system does not describe a planar (genus 0) embedding."""


class SizeLimit(CfumError):
    """The instance is larger than the routine is willing to handle."""


class IsolatedVertex(CfumError):
    """A vertex with empty neighborhood makes the requested notion undefined."""


class MissingEmbedding(CfumError):
    """The operation needs a plane embedding but only got an abstract graph."""


class XNotSubset(CfumError):
    """The given vertex set is not a subset of the graph's vertices."""


class UnknownGadget(CfumError):
    """No gadget generator is registered under the requested name."""


class Timeout(CfumError):
    """A search exceeded its time budget."""


class BoundViolated(CfumError):
    """A constructive routine produced a coloring outside its guaranteed bound."""


class StructureError(CfumError):
    """The input graph lacks structure the algorithm relies on."""
