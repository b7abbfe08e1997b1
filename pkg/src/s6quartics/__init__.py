"""Exact verification toolkit for S6-invariant quartic threefolds and the Coble fourfold.

Subpackages: ``algebra`` (exact scalars, sparse polynomials, matrices), ``groups``
(S6, its subgroups and outer automorphism), ``reps`` (characters), ``varieties``
(the quartic pencil, Verra threefolds, Wiman-Edge pencil), ``maps`` (explicit
rational maps), ``crconfig`` (the Cremona-Richmond configuration) and ``cli``.
"""

__version__ = "0.1.0"
