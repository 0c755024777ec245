"""Command-line interface.

    fgunits invariants --p 3 --orders 9 --involution canonical
    fgunits basis      --p 3 --orders 3,3 --involution 'swap(1,2)' --format json
    fgunits verify     --p 3 --orders 9
    fgunits diagonalize --p 3 --orders 3,3 --involution 'a1->0,1;a2->1,0'

Exit status: 0 success, 1 a verification check failed, 2 usage or input error.
"""

import argparse
from dataclasses import dataclass
import json
import re
import sys

from . import oracle
from .algebra import format_element
from .errors import FGUnitsError
from .group import DEFAULT_MAX_GROUP, GroupSpec
from .involution import InvolutionSpec, diagonalize
from .structure import structure_report
from .suite import run_checks

COMMANDS = ("invariants", "basis", "verify", "diagonalize")

_SWAP = re.compile(r"^swap\((\d+),\s*(\d+)\)$")
_IMAGE = re.compile(r"^a(\d+)\s*->\s*(-?\d+(?:\s*,\s*-?\d+)*)$")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class JobConfig:
    command: str
    p: int
    orders: tuple
    involution: str = "canonical"
    format: str = "text"
    cap: int = oracle.DEFAULT_CAP
    independence_cap: int = oracle.DEFAULT_INDEPENDENCE_CAP
    max_i: int = 2
    max_group: int = DEFAULT_MAX_GROUP

    def to_argv(self):
        return [
            self.command,
            "--p", str(self.p),
            "--orders", ",".join(map(str, self.orders)),
            "--involution", self.involution,
            "--format", self.format,
            "--cap", str(self.cap),
            "--independence-cap", str(self.independence_cap),
            "--max-i", str(self.max_i),
            "--max-group", str(self.max_group),
        ]

    @classmethod
    def from_namespace(cls, ns):
        return cls(
            command=ns.command,
            p=ns.p,
            orders=parse_orders(ns.orders),
            involution=ns.involution,
            format=ns.format,
            cap=ns.cap,
            independence_cap=ns.independence_cap,
            max_i=ns.max_i,
            max_group=ns.max_group,
        )

    def group(self):
        return GroupSpec(self.p, self.orders, max_size=self.max_group)


def parse_orders(text):
    try:
        orders = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad --orders {text!r}; expected e.g. 9 or 3,3") from None
    # a lone "1" means the trivial group
    return tuple(q for q in orders if q != 1)


def parse_involution(text, group):
    """``canonical`` | ``identity`` | ``swap(i,j)`` | ``a1->2,0;a2->0,1`` (1-based)."""
    text = text.strip()
    if text == "canonical":
        return InvolutionSpec.canonical(group)
    if text == "identity":
        return InvolutionSpec.identity(group)
    m = _SWAP.match(text)
    if m:
        i, j = int(m.group(1)) - 1, int(m.group(2)) - 1
        if not (0 <= i < group.t and 0 <= j < group.t):
            raise UsageError(f"swap indices out of range 1..{group.t}")
        return InvolutionSpec.swap(group, i, j)
    images = {}
    for part in filter(None, (s.strip() for s in text.split(";"))):
        m = _IMAGE.match(part)
        if not m:
            raise UsageError(f"cannot parse involution clause {part!r}")
        i = int(m.group(1)) - 1
        image = tuple(int(x) for x in m.group(2).split(","))
        if not 0 <= i < group.t or len(image) != group.t:
            raise UsageError(f"clause {part!r} does not fit a group with {group.t} generators")
        images[i] = image
    if sorted(images) != list(range(group.t)):
        raise UsageError("explicit involution must give the image of every generator")
    return InvolutionSpec.from_images(group, [images[i] for i in range(group.t)])


def ppow(p, k):
    return f"{p}^{k}"


def _header(cfg, d):
    return {
        "p": cfg.p,
        "orders": list(cfg.orders),
        "involution": cfg.involution,
        "l": d.l,
        "t": d.t,
        "diagonal_orders": list(d.group.orders),
    }


def invariants_data(cfg, d, report=None):
    r = report or structure_report(d)
    p = cfg.p
    out = _header(cfg, d)
    out.update(
        order_G=r.size_G,
        order_G_eta=r.fixed_size,
        order_V=ppow(p, r.log_order_V),
        order_S=ppow(p, r.log_order_S),
        order_U=ppow(p, r.log_order_U),
        f_symmetric=list(r.f_symmetric),
        f_unitary=list(r.f_unitary),
        rank_symmetric=r.rank_symmetric,
        rank_unitary=r.rank_unitary,
    )
    return out


def _generators(d):
    return [
        {
            "name": f"b{i + 1}",
            "original": list(b),
            "order": q,
            "action": "inverted" if i < d.l else "fixed",
        }
        for i, (b, q) in enumerate(zip(d.generators, d.group.orders))
    ]


def _entry(e, d):
    terms = e.element.terms()
    return {
        "alpha": list(e.index.alpha),
        "class": e.index.cls,
        "order": e.order,
        "element": format_element(e.element),
        "terms": [[list(g), c] for g, c in terms],
        "terms_diagonal": [[list(d.to_new(g)), c] for g, c in terms],
    }


def basis_data(cfg, d):
    r = structure_report(d)
    out = invariants_data(cfg, d, r)
    out["generators"] = _generators(d)
    out["unitary_basis"] = [_entry(e, d) for e in r.unitary]
    out["symmetric_basis"] = [_entry(e, d) for e in r.symmetric]
    if not r.unitary:
        out["note"] = "unitary subgroup is trivial, basis is empty"
    return out


def diagonalize_data(cfg, d):
    out = _header(cfg, d)
    out["generators"] = _generators(d)
    out["backward"] = [
        {"name": f"a{j + 1}", "diagonal": list(row)} for j, row in enumerate(d.backward)
    ]
    return out


def verify_data(cfg, d):
    results = run_checks(d, cap=cfg.cap, max_i=cfg.max_i, independence_cap=cfg.independence_cap)
    out = _header(cfg, d)
    out["checks"] = [{"name": c.name, "status": c.status, "detail": c.detail} for c in results]
    out["passed"] = all(c.passed for c in results)
    return out


def render_text(data, indent=0):
    pad = "  " * indent
    lines = []
    for key, value in data.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                if set(item) == {"name", "status", "detail"}:
                    tail = f"  ({item['detail']})" if item["detail"] else ""
                    lines.append(f"{pad}  {item['status']:7}  {item['name']}{tail}")
                else:
                    lines.append(f"{pad}  -")
                    lines.extend(render_text(item, indent + 2))
        else:
            lines.append(f"{pad}{key}: {json.dumps(value)}")
    return lines


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fgunits",
        description="Unitary and symmetric units of F_p[G] for abelian p-groups G.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--p", type=int, required=True, help="odd prime")
        sp.add_argument("--orders", required=True, help="cyclic factor orders, e.g. 9 or 3,3")
        sp.add_argument(
            "--involution",
            default="canonical",
            help="canonical | identity | swap(i,j) | 'a1->2,0;a2->0,1'",
        )
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="enumeration cap on |V|")
        sp.add_argument("--independence-cap", type=int, default=oracle.DEFAULT_INDEPENDENCE_CAP)
        sp.add_argument("--max-i", type=int, default=2, help="largest i for power-subgroup checks")
        sp.add_argument("--max-group", type=int, default=DEFAULT_MAX_GROUP, help="size guard on |G|")
        sp.add_argument("--out", help="write the report here instead of stdout")
    return parser


_HANDLERS = {
    "invariants": invariants_data,
    "basis": basis_data,
    "verify": verify_data,
    "diagonalize": diagonalize_data,
}


def run(cfg):
    """Return ``(data, exit_status)`` for a parsed job."""
    group = cfg.group()
    eta = parse_involution(cfg.involution, group)
    d = diagonalize(eta)
    data = _HANDLERS[cfg.command](cfg, d)
    status = 0 if data.get("passed", True) else 1
    return data, status


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = JobConfig.from_namespace(args)
        data, status = run(cfg)
    except (UsageError, FGUnitsError) as exc:
        print(f"fgunits: error: {exc}", file=sys.stderr)
        return 2
    if cfg.format == "json":
        text = json.dumps(data, indent=2)
    else:
        text = "\n".join(render_text(data))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
