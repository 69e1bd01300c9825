"""Finite ultrametric spaces: representing trees, balleans, laminar families
and isometry testing, all in exact rational arithmetic."""

from .ballean import (
    BalleanSpace,
    add_leaf_transform,
    ball_id,
    ballean_diametrical_check,
    ballean_space,
    enumerate_balls,
    hausdorff,
    hausdorff_fast,
    iterate_ballean,
)
from .core import (
    Ball,
    MetricReport,
    Space,
    closed_ball,
    diam,
    format_dist,
    parse_dist,
    smallest_enclosing_ball,
    validate,
)
from .errors import SchemaError, UltrametricError
from .gen import random_space, random_tree
from .iso import CanonicalForm, canonical_form, is_isometric, is_isomorphic
from .laminar import SetFamily, ValidationReport, family_of, reconstruct, validate_family
from .tree import (
    Partition,
    RepTree,
    RootedTree,
    TreeCheck,
    build_tree,
    check_tree,
    diametrical_partition,
    leaf_sets,
    path_max_label,
    space_from_tree,
    tree_distance,
)

__version__ = "0.1.0"
