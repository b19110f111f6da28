"""legcob: slice-word Legendrian fronts and decomposable cobordism certificates.

The engine represents a Legendrian link front as a word of slice events
(cusps and crossings), rewrites it with verified local moves, certifies
decomposable Lagrangian cobordisms by replaying move lists against the
classical-invariant ledger, compiles ribbon presentations into certificates,
and cross-checks every construction against a Kauffman-bracket smooth-type
oracle.
"""

from .cobordism import (
    CobordismCertificate,
    Ledger,
    VerificationReport,
    concatenate,
    replay,
    stabilize_cobordism,
    verify,
)
from .compiler import BandReport, CompileReport, compile_presentation, compile_with_fixed_top
from .front import (
    FrontDiagram,
    SliceEvent,
    StrandMap,
    L,
    R,
    X,
    orient,
    trace_components,
    validate_front,
)
from .invariants import (
    ClassicalInvariants,
    classical_invariants,
    rotation,
    self_linking_pushoff,
    thurston_bennequin,
    writhe,
)
from .io import (
    certificate_from_json,
    certificate_to_json,
    parse_front,
    parse_move,
    presentation_from_json,
    presentation_to_json,
    print_front,
    print_move,
)
from .laurent import LOOP_FACTOR, Laurent
from .moves import (
    Birth,
    CuspPass,
    CuspPassExpand,
    Dodge,
    FishAdd,
    FishDel,
    FixFraming,
    FoldAdd,
    FoldDel,
    GeneralizedPinch,
    R3,
    Saddle,
    Slide,
    StabilizeFront,
    TopStab,
    apply_move,
    double_stabilize,
    expand_macro,
    fronts_equal_up_to_slides,
    normal_form,
    slide_normalize,
    stabilize_front,
)
from .render import RenderSpec, render_certificate, render_front
from .ribbon import (
    BandSpec,
    RawPresentation,
    RibbonPresentation,
    normalize,
    reorder_bands,
    start_front,
    validate_presentation,
)
from .smooth import SmoothDiagram, front_to_smooth, jones, kauffman_bracket

__version__ = "0.1.0"
