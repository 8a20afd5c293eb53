"""Finite geometry over small fields.

Modules are organized by responsibility:
- ``fields``: F_{p^k} arithmetic tables and FieldArray linear algebra
- ``flags``: complete and isotropic flags, relative position
- ``strata``: Deligne-Lusztig strata and curve point counts
- ``building``: incidence graph of the Sp4 building
"""
