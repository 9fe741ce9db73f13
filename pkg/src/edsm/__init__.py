"""Pattern matching in elastic-degenerate texts, exactly or with one error."""
from .eds import (EDString, EDSSyntaxError, MatchKind, OccurrenceReport, Pattern, Segment,
                  parse_eds, remap_alphabet, reverse, serialize_eds)
from .engine import AnchorAlgo, EngineConfig, Task, decide, find_occurrences, run_decision, run_reporting

__all__ = [
    "EDString", "EDSSyntaxError", "MatchKind", "OccurrenceReport", "Pattern", "Segment",
    "parse_eds", "remap_alphabet", "reverse", "serialize_eds",
    "AnchorAlgo", "EngineConfig", "Task", "decide", "find_occurrences", "run_decision", "run_reporting",
]
