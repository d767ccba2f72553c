"""Text and JSON document formats for complexes, ideals and CNF input.

Complex text format: optional '#' comment lines, a 'vertices <n>' header,
then one facet per line as ascending space-separated vertex indices; the
literal token 'empty' is the ∅ facet and zero facet lines denote the void
complex.  The JSON form is {"vertices": n, "facets": [[...], ...]}.

Ideal text format: 'vars <n>' header, one generator per line as variable
indices ('empty' is the unit generator, i.e. the all-zero exponent row).

CNF input is the DIMACS subset: 'c' comments, a 'p cnf <vars> <clauses>'
header, clauses as integers terminated by 0 (may span lines).
"""

import json

from ._bitops import iter_bits
from .core import Complex, make_complex
from .errors import InputError
from .reductions import CnfFormula
from .translation import SquareFreeIdeal, minimalize


def _data_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_complex(text: str) -> Complex:
    """Parse either format (JSON is recognized by a leading '{').  Input
    faces are maximalized, mirroring facets-only input conventions."""
    if text.lstrip().startswith("{"):
        return parse_complex_json(text)
    lines = list(_data_lines(text))
    if not lines or not lines[0].startswith("vertices"):
        raise InputError("complex document must start with 'vertices <n>'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise InputError(f"bad header line {lines[0]!r}") from None
    faces = []
    for line in lines[1:]:
        if line == "empty":
            faces.append(())
            continue
        try:
            faces.append(tuple(int(t) for t in line.split()))
        except ValueError:
            raise InputError(f"bad facet line {line!r}") from None
    return make_complex(n, faces)


def parse_complex_json(text: str) -> Complex:
    try:
        doc = json.loads(text)
        return make_complex(int(doc["vertices"]), [tuple(f) for f in doc["facets"]])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad JSON complex document: {exc}") from None


def write_complex(cx: Complex, as_json: bool = False) -> str:
    if as_json:
        doc = {"vertices": cx.n, "facets": [list(iter_bits(f)) for f in cx.facets]}
        return json.dumps(doc) + "\n"
    out = [f"vertices {cx.n}"]
    for f in cx.facets:
        out.append("empty" if f == 0 else " ".join(str(v) for v in iter_bits(f)))
    return "\n".join(out) + "\n"


def parse_ideal(text: str) -> SquareFreeIdeal:
    lines = list(_data_lines(text))
    if not lines or not lines[0].startswith("vars"):
        raise InputError("ideal document must start with 'vars <n>'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise InputError(f"bad header line {lines[0]!r}") from None
    rows = []
    for line in lines[1:]:
        if line == "empty":
            rows.append(())
            continue
        try:
            rows.append(tuple(int(t) for t in line.split()))
        except ValueError:
            raise InputError(f"bad generator line {line!r}") from None
    return minimalize(rows, n)


def write_ideal(ideal: SquareFreeIdeal) -> str:
    out = [f"vars {ideal.num_vars}"]
    for g in ideal.generators:
        out.append("empty" if g == 0 else " ".join(str(v) for v in iter_bits(g)))
    return "\n".join(out) + "\n"


def write_dimacs(f: CnfFormula) -> str:
    out = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for clause in f.clauses:
        out.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(out) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = None
    tokens = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"bad DIMACS problem line {line!r}")
            try:
                num_vars = int(parts[2])
            except ValueError:
                raise InputError(f"bad DIMACS problem line {line!r}") from None
            continue
        try:
            tokens.extend(int(t) for t in line.split())
        except ValueError:
            raise InputError(f"bad DIMACS clause line {line!r}") from None
    if num_vars is None:
        raise InputError("missing 'p cnf' header")
    clauses = []
    current = []
    for t in tokens:
        if t == 0:
            if current:
                clauses.append(tuple(current))
                current = []
        else:
            current.append(t)
    if current:
        raise InputError("last clause is not terminated by 0")
    return CnfFormula(num_vars, tuple(clauses))


def sniff_kind(text: str) -> str:
    """Classify a document as 'complex', 'ideal' or 'cnf' by its header."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "complex"
    for line in _data_lines(text):
        if line.startswith("vertices"):
            return "complex"
        if line.startswith("vars"):
            return "ideal"
        if line.startswith("p cnf") or line.startswith("c"):
            return "cnf"
        break
    raise InputError("unrecognized document (expected vertices/vars/p cnf header)")
