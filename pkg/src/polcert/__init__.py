"""Exact verification toolkit for cubic maps from the cyclic group of order 3.

Subpackages:

* :mod:`polcert.exactfields` -- scalar arithmetic (Q(omega), its cubic tower, F_3(t))
* :mod:`polcert.fpgroup`     -- words, presentations, coset enumeration, abelianization
* :mod:`polcert.polymap`     -- finite differences of maps into finite groups
* :mod:`polcert.matrep`      -- the two 3x3 matrix representations and their congruence data
* :mod:`polcert.cert`        -- claim registry, certificates and the ``polcert`` command line
"""

__version__ = "0.1.0"
