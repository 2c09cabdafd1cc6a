"""Exact-arithmetic reconstruction of fusion rings, conformal embeddings,
modular invariants, and the quantum-symmetry algebras of module categories.

Everything upstream of the modular layer is done in Fractions; floats only
appear where roots of unity are unavoidable, and every float-facing check
carries an explicit tolerance.
"""

__version__ = "0.1.0"
