# hyperprime/schemas/command.py
from pathlib import Path
from pydantic import BaseModel, Field, field_validator
from typing import Optional, List


def split_labels(text: str) -> List[str]:
    """Split on commas outside brackets, so quotient labels like [0,2] and product labels like (a,b) survive."""
    items: List[str] = []
    depth = 0
    current = ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            items.append(current.strip())
            current = ""
            continue
        current += ch
    items.append(current.strip())
    return [item for item in items if item]


class CommandConfig(BaseModel):
    subcommand: str
    inputs: List[Path] = Field(default_factory=list)
    module: Optional[str] = None
    modules: List[str] = Field(default_factory=list)
    sub: Optional[List[str]] = None  # element labels
    elem: Optional[str] = None
    kind: Optional[str] = None
    phi: Optional[str] = None
    theorems: Optional[List[str]] = None
    json_output: bool = False
    deterministic: bool = True
    max_carrier: int = 16
    zero_search_cap: int = 12

    @field_validator("max_carrier", "zero_search_cap")
    @classmethod
    def validate_positive_cap(cls, v: int) -> int:
        if v <= 0:
            raise ValueError("size caps must be positive")
        return v

    @field_validator("sub", mode="before")
    @classmethod
    def validate_sub(cls, v):
        if isinstance(v, str):
            labels = split_labels(v)
            if not labels:
                raise ValueError("--sub needs at least one element label")
            return labels
        return v

    @field_validator("theorems", "modules", mode="before")
    @classmethod
    def split_ids(cls, v):
        if isinstance(v, str):
            return split_labels(v)
        return v
