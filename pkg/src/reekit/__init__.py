"""Ree hexagons, Ree-Tits ovoids and Ree geometries over GF(3^(2e+1))."""

from .field import (FieldDomainError, FieldElement, FieldParams,
                    FieldUsageError, field_params, parse_field_flag)
from .hexagon import (HexElement, HexagonGeometry, IncidenceUsageError,
                      ProjPoint, graph_distance, hexagon_geometry, incident,
                      infinity_line, infinity_point, line, point,
                      point_in_line_span, psi, to_projective)
from .ovoid import (KnownCollineation, OvoidConsistencyError, OvoidPoint,
                    RootGroupElt, Transporter, compact_to_hex,
                    compact_to_proj, hex_to_compact, is_absolute,
                    known_collineation, ovoid, polarity, proj_to_compact,
                    root_subgroup_orbit, subgroup_elements, transporter_to,
                    u_infty_apply, u_infty_inv, u_infty_mul, u_zero_apply,
                    u_zero_matrix)
from .symbolic import (FormalPoly, IdentityResult, ThetaExponent,
                       run_identity_checks)
from .geometry import (Block, BlockDataError, DerivedObject, ReeContext,
                       all_circles, all_spheres, are_parallel, circle,
                       circle_from_line, gnarl_of, ordinary_line,
                       ordinary_plane, ree_context, sphere,
                       sphere_from_point, unital_block, unital_blocks,
                       vertical_line, vertical_plane, w_set)
from .autgroup import AutResult, automorphism_group, automorphisms
from .suites import CheckReport, build_checks, run_suite

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
