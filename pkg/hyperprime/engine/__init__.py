# hyperprime/engine/__init__.py
# Re-export the service objects for `from hyperprime.engine import axioms, classify, ...`
from .axioms import axioms
from .subobjects import subobjects
from .classify import classify, ClassKind
from .construct import construct
from .phi import PhiFunction, PHI_REGISTRY, IDEAL_PHI_REGISTRY, lift_phi, product_phi
