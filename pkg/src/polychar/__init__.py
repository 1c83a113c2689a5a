"""Exact-arithmetic polytope expansion of Lie characters.

Core objects: root systems of the simple series A-G, Weyl groups,
partition-function tables, characters, polytope sums, tensor products,
and subalgebra branching rules, all over integer/rational arithmetic.
"""

from .characters import (
    DominantMultMap,
    dim,
    full_character,
    mult_freudenthal,
    mult_kostant,
    orbit_decomposition_matrices,
    orbit_sum,
)
from .dominance import TriangularSystem, dominant_cone_below
from .formal import FormalSum, eval_numeric
from .partition import FTable, PartitionTable, f_table, kostant_table
from .polytope import (
    PolytopeMultMap,
    ainv_matrix,
    brion_check,
    membership,
    polytope_dimension,
    polytope_mults,
    polytope_sum,
    recover_mults,
)
from .products import (
    TensorDecomposition,
    tensor_bruteforce,
    tensor_polytope,
    tensor_racah_speiser,
)
from .branching import (
    BranchingResult,
    ChildAlgebra,
    Embedding,
    branch_bruteforce,
    branch_via_orbits,
    branch_via_polytopes,
    embedding_from_dict,
    embedding_from_file,
    embedding_principal_a1,
    embedding_regular_subdiagram,
    parse_embedding_spec,
)
from .rootsystem import (
    AlgebraId,
    RootSystemData,
    algebra,
    build_algebra,
    dominance_leq,
    inner_product,
    parse_algebra,
    weight_to_root_basis,
)
from .weyl import (
    ConeData,
    WeylElement,
    cone_data,
    dominant_representative,
    generate_weyl,
    orbit,
    shifted_action,
)

__version__ = "0.1.0"
