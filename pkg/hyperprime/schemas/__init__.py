# hyperprime/schemas/__init__.py
from .axiom import AxiomCheck, AxiomReport, StructureKind
from .harness import PropertyStatus, PropertyResult, HarnessReport
from .command import CommandConfig
from .verdict import CounterexampleOut, ClassificationVerdict, ZeroWitnessOut, ZeroListing
