# hyperprime/schemas/verdict.py
from pydantic import BaseModel, Field
from typing import Optional, List


class CounterexampleOut(BaseModel):
    scalars: List[str]
    element: str


class ClassificationVerdict(BaseModel):
    module: str
    sub: List[str]
    kind: str
    phi: Optional[str] = None
    verdict: bool
    counterexample: Optional[CounterexampleOut] = None


class ZeroWitnessOut(BaseModel):
    scalars: List[str]
    subset: List[str]


class ZeroListing(BaseModel):
    module: str
    sub: List[str]
    weakly_classical_prime: bool
    zeros: List[ZeroWitnessOut] = Field(default_factory=list)
