"""Serialized command output."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from src.rootsys import CONVENTION_NOTE

REPORT_VERSION = 1


@dataclass(frozen=True)
class Report:
    command: str
    inputs: dict[str, Any]
    payload: Any
    convention_note: str = CONVENTION_NOTE
    table: Optional[list[dict[str, Any]]] = field(default=None,
                                                  compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            'version': REPORT_VERSION,
            'command': self.command,
            'inputs': self.inputs,
            'payload': self.payload,
            'convention_note': self.convention_note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=4)
