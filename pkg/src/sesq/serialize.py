"""Canonical JSON interchange.

One format per object kind, dispatched by shape: a "kind" key means a field
descriptor, "structure" an algebra, "action" a module, "gram" a form,
"grams" a system, "gram_k" a group-invariant bilinear form, and "arrows" a
double-arrow object.  Field elements are encoded as strings (or string
lists) so nothing depends on number formatting, and save(load(x)) is
byte-identical on canonical files.
"""

from __future__ import annotations

import json

from .algebra import GroupData, InvAlgebra
from .amodule import ModuleHom, RightModule
from .darrow import DoubleArrow
from .errors import BadDescriptor, ParseError, ValidationFailed
from .exactfield import field_make
from .sesqform import GBilinearForm, SesqForm, SesqSystem


def canonical_dumps(data):
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# to JSON
# ---------------------------------------------------------------------------

def field_to_json(F):
    return F.descriptor()


def algebra_to_json(A):
    F = A.field
    out = {
        "field": F.descriptor(),
        "dim": A.dim,
        "basis": list(A.basis_names),
        "unit": [F.el_to_json(c) for c in A.unit],
        "structure": [[[F.el_to_json(c) for c in A.structure[i][j]]
                       for j in range(A.dim)] for i in range(A.dim)],
        "involution": [[F.el_to_json(c) for c in row] for row in A.invol],
    }
    if A.group is not None:
        out["group"] = A.group.to_json()
    return out


def module_to_json(V):
    F = V.field
    return {
        "algebra": algebra_to_json(V.algebra),
        "dim": V.dim,
        "action": [[[F.el_to_json(c) for c in row] for row in R]
                   for R in V.actions],
    }


def _gram_to_json(F, gram):
    return [[[F.el_to_json(c) for c in entry] for entry in row] for row in gram]


def form_to_json(s):
    return {"module": module_to_json(s.module),
            "gram": _gram_to_json(s.module.field, s.gram)}


def system_to_json(s):
    return {"module": module_to_json(s.module),
            "grams": [_gram_to_json(s.module.field, g) for g in s.grams]}


def gbilinear_to_json(b):
    F = b.module.field
    return {"module": module_to_json(b.module),
            "gram_k": [[F.el_to_json(c) for c in row] for row in b.bmat]}


def object_to_json(M):
    F = M.V.field
    return {
        "V": module_to_json(M.V),
        "W": module_to_json(M.W),
        "arrows": [[[[F.el_to_json(c) for c in row] for row in f.mat],
                    [[F.el_to_json(c) for c in row] for row in g.mat]]
                   for f, g in M.arrows],
    }


def to_json(obj):
    from .exactfield import Field
    if isinstance(obj, Field):
        return field_to_json(obj)
    if isinstance(obj, InvAlgebra):
        return algebra_to_json(obj)
    if isinstance(obj, RightModule):
        return module_to_json(obj)
    if isinstance(obj, SesqForm):
        return form_to_json(obj)
    if isinstance(obj, SesqSystem):
        return system_to_json(obj)
    if isinstance(obj, GBilinearForm):
        return gbilinear_to_json(obj)
    if isinstance(obj, DoubleArrow):
        return object_to_json(obj)
    raise BadDescriptor(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# from JSON
# ---------------------------------------------------------------------------

def algebra_from_json(data):
    F = field_make(data["field"])
    dim = int(data["dim"])
    unit = [F.el_from_json(c) for c in data["unit"]]
    structure = [[[F.el_from_json(c) for c in entry] for entry in row]
                 for row in data["structure"]]
    invol = [[F.el_from_json(c) for c in row] for row in data["involution"]]
    names = [str(x) for x in data.get("basis", [f"a{i}" for i in range(dim)])]
    group = None
    if "group" in data:
        g = data["group"]
        from .algebra import _check_group
        table = [[int(x) for x in row] for row in g["table"]]
        inverse = _check_group(table, int(g["unit"]))
        group = GroupData([str(x) for x in g["elements"]], table,
                          int(g["unit"]), inverse)
    return InvAlgebra(F, dim, structure, unit, invol,
                      basis_names=names, group=group).validate()


def module_from_json(data):
    A = algebra_from_json(data["algebra"])
    F = A.field
    actions = [[[F.el_from_json(c) for c in row] for row in R]
               for R in data["action"]]
    return RightModule(A, int(data["dim"]), actions).validate()


def _gram_from_json(F, data):
    return [[[F.el_from_json(c) for c in entry] for entry in row]
            for row in data]


def form_from_json(data):
    V = module_from_json(data["module"])
    return SesqForm(V, _gram_from_json(V.field, data["gram"])).validate()


def system_from_json(data):
    V = module_from_json(data["module"])
    return SesqSystem(V, [_gram_from_json(V.field, g)
                          for g in data["grams"]]).validate()


def gbilinear_from_json(data):
    V = module_from_json(data["module"])
    bmat = [[V.field.el_from_json(c) for c in row] for row in data["gram_k"]]
    return GBilinearForm(V, bmat).validate()


def object_from_json(data):
    V = module_from_json(data["V"])
    W = module_from_json(data["W"])
    F = V.field
    arrows = []
    for fmat, gmat in data["arrows"]:
        f = ModuleHom(V, W, [[F.el_from_json(c) for c in row] for row in fmat])
        g = ModuleHom(V, W, [[F.el_from_json(c) for c in row] for row in gmat])
        arrows.append((f, g))
    return DoubleArrow(V, W, arrows).validate()


def from_json(data):
    if not isinstance(data, dict):
        raise BadDescriptor("top-level JSON must be an object")
    if "kind" in data:
        return field_make(data)
    if "arrows" in data:
        return object_from_json(data)
    if "gram_k" in data:
        return gbilinear_from_json(data)
    if "grams" in data:
        return system_from_json(data)
    if "gram" in data:
        return form_from_json(data)
    if "action" in data:
        return module_from_json(data)
    if "structure" in data:
        return algebra_from_json(data)
    raise BadDescriptor("unrecognized object shape")


# ---------------------------------------------------------------------------
# files
# ---------------------------------------------------------------------------

def loads(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}")
    return from_json(data)


def dumps(obj):
    return canonical_dumps(to_json(obj))


def fixture_path(name):
    import os
    return os.path.join(os.path.dirname(__file__), "fixtures", name)


def load_fixture(name):
    return load(fixture_path(name))


def load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def save(obj, path):
    text = dumps(obj)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
