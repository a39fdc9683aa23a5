"""gridifs: exact decisions for grid-aligned graph-directed attractors.

The package answers, with integer arithmetic only, whether two components of
a graph-directed attractor intersect, whether a component touches a face of
the unit cube, and whether a sponge-like self-similar set is connected.
"""

from .core import (
    CellMap,
    DyadicCube,
    Edge,
    Face,
    GdsSpec,
    GridAlignmentError,
    GridError,
    GridFace,
    MalformedWalkError,
    ResourceBudgetError,
    WordMap,
    compose_word,
    cube_intersection,
    cube_of_word,
    face_meets_cell,
    face_meets_cube,
    outgoing,
    pull_back_face,
    validate,
)
from .faces import (
    FaceGraph,
    ReducedSystem,
    build_face_graph,
    face_meets_attractor,
    face_survivors,
    has_arbitrarily_long_walks,
    has_walk_of_length,
    reduce_to_faces,
    vertex_in_attractor_finite,
)
from .intersect import (
    EMPTY,
    NONEMPTY,
    DashedWitness,
    Decision,
    DiagonalWitness,
    IntersectingGraph,
    SolidCycleWitness,
    SolidStep,
    TerminalDashed,
    TerminalSolid,
    TerminatedWalkWitness,
    build_intersecting_graph,
    decide_intersection,
    decide_intersection_bounded,
    mark_terminated,
    max_solid_depth_needed,
    replay_witness,
)
from .oracle import (
    DEFAULT_BUDGET,
    Approximation,
    approx_intersects,
    approximate,
    c_constant,
    c_constant_conjectured,
    cubes_connected,
    decide_by_iteration,
    word_commutation_check,
)
from .render import corners_ppm, corners_svg, corners_text
from .serialize import (
    SpecFormatError,
    dump_system,
    gds_from_dict,
    gds_to_dict,
    load_system,
    sponge_from_dict,
    sponge_to_dict,
)
from .sponge import (
    C_constant,
    HataGraph,
    SpongeSpec,
    Symmetry,
    compose,
    digit_action,
    enumerate_group,
    fast_path,
    hata_graph,
    is_connected,
    iterate_sponge,
    pair_system,
    sponge_to_gds,
    validate_sponge,
)

__version__ = "0.1.0"
