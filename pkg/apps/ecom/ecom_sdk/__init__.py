"""
Ecom SDK
========
Combinatorial models of Ecom G for finite groups: the AfCom(G) simplicial
complex, the coset posets AbCo(G) and mAbCo(G), their integral homology,
fundamental-group presentations and the commutator homomorphism onto [G,G].
"""

__version__ = "0.1.0"
