"""Pass reports and run results"""

from dataclasses import asdict, dataclass, field
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from ..completion_args import CompletionArguments
from ..constants import HISTORY_NAME, RULES_NAME, SUMMARY_NAME
from ..reduction import ReductionEngine
from ..rules import FrozenRuleAutomaton, Presentation, serialize_automaton
from ..words import Rule

logger = logging.getLogger(__name__)


@dataclass
class PassReport:
    """Counters of one completion pass, taken after ``rules_n`` is rebuilt.

    Attributes:
        rules (int): rules in the store, Delete included.
        wdiff_states (int): states of the new ``rules_n``.
        wdiff_arrows (int): arrows of the new ``rules_n``.
        new (int): rules waiting in New when the pass ended, left for the next pass.
        merges (int): state identifications in ``wdiff`` during the pass.
    """

    pass_no: int
    rules: int
    wdiff_states: int
    wdiff_arrows: int
    new: int
    aborted: bool
    stable: bool
    canonical_equal: bool = False
    merges: int = 0

    def line(self) -> str:
        return (
            f"pass {self.pass_no} rules={self.rules} wdiff_states={self.wdiff_states} new={self.new}"
            f" aborted={str(self.aborted).lower()} stable={str(self.stable).lower()}"
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class RunResult:
    """Outcome of a completion run.

    Attributes:
        presentation (Presentation): the input presentation.
        automaton (FrozenRuleAutomaton): the last rule automaton built.
        rules (List[Rule]): the store contents when the run ended.
        reports (List[PassReport]): one report per pass.
        stabilized (bool): the rule automaton stopped changing.
        limit_hit (str, optional): name of the limit that ended the run early.
        args (CompletionArguments): the configuration used.
    """

    presentation: Presentation
    automaton: FrozenRuleAutomaton
    rules: List[Rule]
    reports: List[PassReport] = field(default_factory=list)
    stabilized: bool = False
    limit_hit: Optional[str] = None
    args: CompletionArguments = field(default_factory=CompletionArguments)

    @property
    def confluent(self) -> bool:
        return self.stabilized and self.limit_hit is None

    @property
    def pass_count(self) -> int:
        return len(self.reports)

    def history(self) -> pd.DataFrame:
        columns = [f for f in PassReport.__dataclass_fields__]
        return pd.DataFrame([report.to_dict() for report in self.reports], columns=columns)

    def reducer(self) -> ReductionEngine:
        return ReductionEngine(self.automaton)

    def summary(self) -> Dict[str, Any]:
        return {
            "presentation": self.presentation.name,
            "stabilized": self.stabilized,
            "confluent": self.confluent,
            "limit_hit": self.limit_hit,
            "passes": self.pass_count,
            "rules": len(self.rules),
            "states": self.automaton.state_count,
            "arrows": self.automaton.arrow_count,
            "args": self.args.to_dict(),
        }

    def save(self, directory: Union[str, os.PathLike]) -> Path:
        """Write the rule automaton, the pass history and a JSON summary into ``directory``."""
        directory = Path(directory)
        try:
            directory.mkdir(parents=True, exist_ok=True)
            (directory / RULES_NAME).write_text(serialize_automaton(self.automaton), encoding="utf-8")
            self.history().to_csv(directory / HISTORY_NAME, index=False)
            with open(directory / SUMMARY_NAME, "w", encoding="utf-8") as file:
                json.dump(self.summary(), file, indent=4)
            logger.info(f"Saved run of {self.presentation.name} to {directory}")
        except Exception as e:
            logger.error(f"Failed to save run to {directory}: {str(e)}")
            raise
        return directory
