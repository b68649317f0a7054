"""Text rendering of Young diagrams (English convention)."""

from specht.errors import DomainError
from specht.partitions import Partition, hook_lengths

__all__ = ["render_diagram"]

CELL = "*"


def render_diagram(la, annotate="none", e=None):
    """Row ``i`` of the diagram on line ``i``.

    ``annotate`` is ``"none"``, ``"hooks"`` or ``"residues"`` (which needs ``e``).

    >>> print(render_diagram((2, 1), "hooks"))
    3 1
    1
    """
    la = Partition(la)
    if not la:
        return ""
    if annotate == "none":
        labels = {node: CELL for node in hook_lengths(la)}
    elif annotate == "hooks":
        labels = {node: str(h) for node, h in hook_lengths(la).items()}
    elif annotate == "residues":
        if e is None or e < 2:
            raise DomainError("residue annotation needs e >= 2")
        labels = {(i, j): str((j - i) % e) for (i, j) in hook_lengths(la)}
    else:
        raise DomainError(f"unknown annotation {annotate!r}")
    width = max(len(s) for s in labels.values())
    lines = []
    for i, part in enumerate(la, 1):
        lines.append(" ".join(labels[i, j].rjust(width) for j in range(1, part + 1)))
    return "\n".join(lines)
