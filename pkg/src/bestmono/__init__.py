"""Degree-sequence conditions that force graph properties, with exact oracles."""

from .errors import (
    BestMonoError,
    DegreeOutOfRange,
    EmptyPart,
    LengthMismatch,
    NotGraphical,
    ParamOutOfDomain,
    ParamOutOfRange,
    ParseError,
    ScaleExceeded,
    SequenceTooShort,
)
from .graph import Graph
from .sequences import (
    DegreeSequence,
    blocking_condition,
    complement,
    enumerate_graphical,
    is_graphical,
    majorizes,
    parse_sequence,
    realize,
    render_sequence,
)

__version__ = "0.1.0"
