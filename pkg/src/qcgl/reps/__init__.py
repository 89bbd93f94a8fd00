from .base import (DeltaTerm, GENERATOR_KINDS, GeneratorMode, Module, PoleCollision, Q1, Q2, Q3, StateVector,
                   e_prefactor, f_prefactor)
from .vector import U, TensorModule, VectorModule, gamma_at, gamma_fn, tensor_apply, vector_apply
from .wn import WNModule, beta_fock, beta_resonance, beta_tail_rows, wn_apply, wn_modified_apply
from .fock import FockModule, component_psi, fock_apply, fock_factorized_check, psi_empty
from .resonance import ResonanceModule, resonance_apply, tau_label

__all__ = [n for n in dir() if not n.startswith("_")]
