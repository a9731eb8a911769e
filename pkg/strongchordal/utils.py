from typing import Optional, Tuple

from .models import GeneratorKind


def validate_order_flags(strong: bool, perfect: bool) -> Tuple[bool, str]:
    """
    Validates the order-kind flags of check-order: at most one of them may
    be given (strong is the default).
    """
    if strong and perfect:
        return False, "--strong and --perfect are mutually exclusive."
    return True, ""


def validate_generate_options(
    kind: GeneratorKind,
    nodes: Optional[int],
    verts: Optional[int],
    max_weight: Optional[int],
    k: Optional[int],
) -> Tuple[bool, str]:
    """
    Validates the size options of the generate command against the chosen
    kind: suns take --k only, the representation kinds take --nodes/--verts
    (and rdv --max-weight), random graphs take --verts.
    """
    if kind is GeneratorKind.SUN:
        if k is None:
            return False, "--k is required for --kind sun."
        if nodes is not None or verts is not None or max_weight is not None:
            return False, "--kind sun takes only --k."
        return True, ""
    if k is not None:
        return False, f"--k is only valid for --kind sun, not {kind.value}."
    if kind is GeneratorKind.RANDOM:
        if verts is None:
            return False, "--verts is required for --kind random."
        return True, ""
    if nodes is None or verts is None:
        return False, f"--nodes and --verts are required for --kind {kind.value}."
    if kind is GeneratorKind.CHORDAL and max_weight is not None:
        return False, "--max-weight is only valid for --kind rdv."
    return True, ""
