from dataclasses import asdict, dataclass, field, fields
import json
import logging
import os
from typing import Any, Dict, Union

logger = logging.getLogger(__name__)


@dataclass
class CompletionArguments:
    max_passes: int = field(default=1000, metadata={"help": "Stop after this many completion passes."})
    max_states: int = field(
        default=1_000_000, metadata={"help": "Stop when the word-difference automaton has more states than this."}
    )
    max_rules: int = field(default=1_000_000, metadata={"help": "Stop when the rule store holds more rules than this."})
    abort_growth_ratio: float = field(
        default=0.25,
        metadata={
            "help": (
                "Abort a pass once the word-difference automaton grew by more than this fraction of the"
                " previous rule automaton's states plus arrows. Zero or less disables aborting."
            )
        },
    )
    abort_min_growth: int = field(
        default=64, metadata={"help": "Never abort a pass before the automaton grew by this many states and arrows."}
    )
    stable_passes: int = field(
        default=2,
        metadata={"help": "Number of consecutive passes that must leave the rule automaton unchanged."},
    )
    check_invariants: bool = field(
        default=True,
        metadata={
            "help": (
                "Raise when a deleted rule is inserted into the store again or a sampled reducible word"
                " becomes irreducible."
            )
        },
    )
    monotone_samples: int = field(
        default=32, metadata={"help": "Reducible words sampled after every pass and checked after later passes."}
    )

    def __post_init__(self):
        for name in ("max_passes", "max_states", "max_rules", "stable_passes"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1, got {getattr(self, name)}")
        if self.abort_min_growth < 0:
            raise ValueError(f"abort_min_growth must be non-negative, got {self.abort_min_growth}")
        if self.monotone_samples < 0:
            raise ValueError(f"monotone_samples must be non-negative, got {self.monotone_samples}")

    @property
    def aborts_enabled(self) -> bool:
        return self.abort_growth_ratio > 0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self, json_file: Union[str, os.PathLike]) -> None:
        with open(json_file, "w", encoding="utf-8") as file:
            json.dump(self.to_dict(), file, indent=4)

    @classmethod
    def from_dict(cls, config_dict: Dict[str, Any]) -> "CompletionArguments":
        known = {f.name for f in fields(cls)}
        unknown = set(config_dict) - known
        if unknown:
            logger.error(f"Unknown completion arguments: {', '.join(sorted(unknown))}")
            raise ValueError(f"Unknown completion arguments: {', '.join(sorted(unknown))}")
        return cls(**config_dict)

    @classmethod
    def from_json(cls, json_file: Union[str, os.PathLike]) -> "CompletionArguments":
        with open(json_file, "r", encoding="utf-8") as reader:
            return cls.from_dict(json.load(reader))
