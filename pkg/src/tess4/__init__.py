"""tess4: exact-integer geometry of equilateral triangles and regular
tetrahedra in the 4-dimensional integer lattice.

The library is organized around:

* `tess4.diophantine` - the equation a^2+b^2+c^2 = 3d^2, its counting
  formulas, and the companion equation 2a^2+c^2 = 3d^2;
* `tess4.lattice` - triangles, tetrahedra, constructive families,
  box-symmetry canonical forms;
* `tess4.characterize` - Plücker systems, plane reconstruction from
  representation pairs, plane lattices, Ehrhart polynomials;
* `tess4.enumeration` - exhaustive orbit enumeration, the minimal
  census, and conjecture scans;
* `tess4.cli` - the `tess4` command-line front end.

All arithmetic is exact (Python integers and fractions); no floats.
"""

from .diophantine import (
    CountBreakdown,
    QuadrupleSeed,
    TripleSolution,
    TwoOneSolution,
    count_primitive,
    legendre_minus3,
    primitive_solutions,
    signed_rep_count,
    solution_from_seed,
    twin_count,
    two_one_brute_force,
    two_one_solutions,
)
from .errors import (
    DomainError,
    InternalConsistencyError,
    MemoryCapExceeded,
    NotFoundError,
)
from .lattice import (
    PlaneFrame,
    SymmetryOp,
    Tetrahedron,
    Triangle,
    admissible_side_squared,
    canonical_form,
    complete_point,
    generate_mn,
    is_equilateral,
    is_irreducible,
    plane_frame,
    seed_tetrahedron,
    seed_triangle,
    triple_tetrahedron,
    triple_triangle,
)
from .characterize import (
    EhrhartPoly,
    PlaneLattice,
    PlaneSystem,
    PluckerSystem,
    QuadraticFormData,
    RepresentationPair,
    construct_triangle,
    ehrhart,
    fundamental_area_squared,
    gram_identity_check,
    interior_count,
    minimal_scale,
    normalize_corner,
    orthogonal_vectors,
    plane_from_reps,
    plane_lattice_basis,
    plane_quadratic_form,
    pluckers_from_triangle,
    reduce_pluckers,
    rep_vectors,
    representation_pair,
    reps_from_pluckers,
)
from .enumeration import (
    CensusRow,
    ConjectureReport,
    CoverageRow,
    census,
    conjecture_scan,
    count_side_orbits,
    enumerate_triangles,
    is_minimal,
    seed_coverage,
    tetrahedron_completions,
)

__version__ = "0.1.0"
