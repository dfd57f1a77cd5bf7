"""
Report Schema
=============
Every CLI command returns one Report. Serialization is deterministic: keys are
sorted, and wall-clock timing is only present when it was asked for.

{
  "tool": "ecom",
  "version": "0.1.0",
  "command": "homology",
  "spec": {"kind": "named", "family": "symmetric", "param": 3},
  "budget": {...},
  "result": {...},
  "timing": {"seconds": 0.41}          # only with --timing
}
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ecom_sdk import __version__


@dataclass
class Report:
    """Output of one command."""
    command: str
    result: Dict[str, Any]
    spec: Optional[Dict[str, Any]] = None
    budget: Dict[str, Any] = field(default_factory=dict)
    timing: Optional[Dict[str, float]] = None
    version: str = __version__
    exit_code: int = field(default=0, repr=False)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "tool": "ecom",
            "version": self.version,
            "command": self.command,
            "spec": self.spec,
            "budget": self.budget,
            "result": self.result,
        }
        if self.timing is not None:
            out["timing"] = self.timing
        return out

    def to_json(self, pretty: bool = False) -> str:
        if pretty:
            return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
