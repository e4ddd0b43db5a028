"""Text file formats: braided pairs, crossed sets, cochains, groups.

All files are line oriented; blank lines and '#' comments are ignored.
Scalars use the whitespace-free token syntax of ``scalars.format_scalar``
(comma-joined num[/den]:exp terms at the file's conductor, bare integers
allowed).
"""

from .scalars import format_scalar, parse_scalar
from . import groups as _groups
from . import pairs as _pairs
from . import quandles as _quandles


def _lines(text):
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _expect(line, key):
    parts = line.split()
    if parts[0] != key:
        raise ValueError(f"expected {key!r}, found {line!r}")
    return parts[1:]


# ---------------------------------------------------------------------------
# braided pairs

def dump_pair(bp):
    lines = [f"kind {bp.kind}", f"conductor {bp.conductor}", f"dim {bp.dim}"]
    if bp.kind == "diagonal":
        q = _pairs.is_diagonal(bp)
        lines.append("matrix")
        for row in q:
            lines.append(" ".join(format_scalar(v) for v in row))
    elif bp.kind == "v3":
        lines.append(f"q {format_scalar(bp.params['q'])}")
    elif bp.kind == "v4":
        lines.append(f"q {format_scalar(bp.params['q'])}")
        lines.append(f"alpha {format_scalar(bp.params['alpha'])}")
    elif bp.kind == "two_by_two":
        for name in ("q1", "q2", "eta1", "eta2", "beta1", "beta2"):
            lines.append(f"{name} {format_scalar(bp.params[name])}")
    elif bp.kind == "cocycle":
        xset = bp.params["xset"]
        f = bp.params["cocycle"]
        lines.append(f"size {xset.size}")
        for row in xset.table:
            lines.append(" ".join(str(v) for v in row))
        lines.append(f"modulus {f.modulus}")
        for row in f.exponents:
            lines.append(" ".join(str(v) for v in row))
    else:
        lines[0] = "kind matrix"
        lines.append("matrix")
        n = bp.dim * bp.dim
        mat = bp.matrix()
        for r in range(n):
            lines.append(" ".join(format_scalar(mat[r][c]) for c in range(n)))
    return "\n".join(lines) + "\n"


def load_pair(text):
    lines = _lines(text)
    kind = _expect(lines[0], "kind")[0]
    conductor = int(_expect(lines[1], "conductor")[0])
    dim = int(_expect(lines[2], "dim")[0])
    body = lines[3:]
    if kind == "diagonal":
        if body[0] != "matrix":
            raise ValueError("diagonal pair needs a matrix block")
        rows = [[parse_scalar(tok, conductor) for tok in line.split()]
                for line in body[1:1 + dim]]
        return _pairs.diagonal(rows)
    if kind == "v3":
        return _pairs.v3(parse_scalar(_expect(body[0], "q")[0], conductor))
    if kind == "v4":
        return _pairs.v4(parse_scalar(_expect(body[0], "q")[0], conductor),
                         parse_scalar(_expect(body[1], "alpha")[0], conductor))
    if kind == "two_by_two":
        vals = [parse_scalar(_expect(body[i], name)[0], conductor)
                for i, name in enumerate(
                    ("q1", "q2", "eta1", "eta2", "beta1", "beta2"))]
        return _pairs.two_by_two(*vals)
    if kind == "cocycle":
        size = int(_expect(body[0], "size")[0])
        table = [[int(v) for v in body[1 + i].split()] for i in range(size)]
        modulus = int(_expect(body[1 + size], "modulus")[0])
        expo = [[int(v) for v in body[2 + size + i].split()]
                for i in range(size)]
        xset = _quandles.CrossedSet(table)
        return _pairs.from_cocycle(xset, _quandles.Cochain2(modulus, expo))
    if kind == "matrix":
        if body[0] != "matrix":
            raise ValueError("matrix pair needs a matrix block")
        n = dim * dim
        cmap = [[] for _ in range(n)]
        for r in range(n):
            toks = body[1 + r].split()
            if len(toks) != n:
                raise ValueError("matrix block has the wrong width")
            for c, tok in enumerate(toks):
                v = parse_scalar(tok, conductor)
                if v:
                    cmap[c].append((r, v))
        return _pairs.BraidedPair(dim, cmap)
    raise ValueError(f"unknown pair kind {kind!r}")


# ---------------------------------------------------------------------------
# crossed sets, cochains, groups

def dump_crossed_set(xset):
    lines = [f"size {xset.size}"]
    for row in xset.table:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def load_crossed_set(text):
    lines = _lines(text)
    size = int(_expect(lines[0], "size")[0])
    table = [[int(v) for v in lines[1 + i].split()] for i in range(size)]
    return _quandles.CrossedSet(table)


def dump_cochain(cochain):
    lines = [f"modulus {cochain.modulus}"]
    for row in cochain.exponents:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def load_cochain(text):
    lines = _lines(text)
    modulus = int(_expect(lines[0], "modulus")[0])
    expo = [[int(v) for v in line.split()] for line in lines[1:]]
    return _quandles.Cochain2(modulus, expo)


def dump_group(group):
    lines = [f"order {group.order}"]
    for row in group.table:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def load_group(text):
    lines = _lines(text)
    order = int(_expect(lines[0], "order")[0])
    table = [[int(v) for v in lines[1 + i].split()] for i in range(order)]
    return _groups.FiniteGroup(table)
