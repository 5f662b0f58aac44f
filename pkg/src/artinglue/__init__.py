"""Artin glueings of finite frames as adjoint split extensions.

Frames are finite distributive lattices; morphisms are maps preserving
finite meets. The submodules follow the layers of the theory:

``lattice``      frames, Heyting implication, up/down-set frames, products
``morphisms``    meet-preserving maps, adjoints, hom-set enumeration, isomorphism search
``glueing``      the glueing construction and its canonical maps
``extensions``   kernels, cokernels, adjoint extensions and their classification
``functorial``   pullback/pushout actions, naturality, Baer meets
``extcat``       morphisms of (adjoint) extensions and the order equivalence
``laws``         the exhaustive law suite behind ``artinglue check-laws``
"""

from .catalog import Catalog, boolean, boolean_square, chain, grid
from .extensions import (
    AdjointExtension,
    ExtensionClass,
    canonical_glue_iso,
    characteristic_map,
    cokernel,
    extension_from_u,
    glueing_as_extension,
    kernel_of_normal_epi,
)
from .functorial import baer_meet, enumerate_extensions, pullback_extension, pushout_extension
from .glueing import Glueing, glue, recover_alpha
from .lattice import FiniteFrame, Poset, down_set_frame, heyting_impl, product_frame, up_set_frame, validate_frame
from .morphisms import (
    FrameIso,
    MeetHom,
    compose,
    enumerate_meet_homs,
    find_frame_isomorphism,
    identity,
    left_adjoint,
    pointwise_leq,
    pointwise_meet,
    right_adjoint,
    top_morphism,
    validate_meet_hom,
)

__version__ = "0.1.0"
