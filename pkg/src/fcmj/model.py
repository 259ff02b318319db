"""Hierarchical system model: modules, components, tree edges, schedules.

Instances are built without validation so malformed trees can be inspected;
``validate`` reports problems and ``require_valid`` turns them into an error.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Any, Mapping


class InstanceError(ValueError):
    pass


class InfeasibleSchedule(ValueError):
    def __init__(self, message: str, component: str | None = None):
        super().__init__(message)
        self.component = component


class TriggerMode(str, enum.Enum):
    DESCENDANTS = "descendants"
    DIRECT_CHILDREN = "direct-children"


def node_key(node_id: str) -> tuple:
    """Sort key for node ids: numeric labels in numeric order, then the rest."""
    if node_id.isdigit():
        return (0, int(node_id), node_id)
    return (1, 0, node_id)


def parse_rational(value: Any) -> Fraction:
    """Exact rational from an int or a string such as "3149" or "7/2"."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InstanceError(f"setup cost must be an int or exact string, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InstanceError(f"cannot parse setup cost {value!r}") from exc
    raise InstanceError(f"cannot parse setup cost {value!r}")


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Component:
    id: str
    setup_cost: Fraction
    cycle_limit: int


@dataclass(frozen=True)
class Module:
    id: str
    setup_cost: Fraction


@dataclass(frozen=True)
class Violation:
    node: str | None
    message: str
    fatal: bool = True

    def __str__(self) -> str:
        where = f"[{self.node}] " if self.node is not None else ""
        kind = "error" if self.fatal else "warning"
        return f"{kind}: {where}{self.message}"


@dataclass(frozen=True)
class Instance:
    components: tuple[Component, ...]
    modules: tuple[Module, ...]
    edges: tuple[tuple[str, str], ...]
    root: str
    trigger_mode: TriggerMode = TriggerMode.DESCENDANTS

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "modules", tuple(self.modules))
        object.__setattr__(self, "edges", tuple((str(a), str(b)) for a, b in self.edges))
        object.__setattr__(self, "trigger_mode", TriggerMode(self.trigger_mode))

    @cached_property
    def component_map(self) -> dict[str, Component]:
        return {c.id: c for c in self.components}

    @cached_property
    def module_map(self) -> dict[str, Module]:
        return {m.id: m for m in self.modules}

    @cached_property
    def children(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {}
        for parent, child in self.edges:
            out.setdefault(parent, []).append(child)
        return out

    @cached_property
    def component_ids(self) -> list[str]:
        """Component ids in canonical (search) order."""
        return sorted(self.component_map, key=node_key)

    def with_trigger_mode(self, mode: TriggerMode | str) -> Instance:
        return Instance(self.components, self.modules, self.edges, self.root, TriggerMode(mode))

    def scaled(self, factor: Fraction) -> Instance:
        """Copy with every setup cost multiplied by ``factor``."""
        return Instance(
            tuple(Component(c.id, c.setup_cost * factor, c.cycle_limit) for c in self.components),
            tuple(Module(m.id, m.setup_cost * factor) for m in self.modules),
            self.edges,
            self.root,
            self.trigger_mode,
        )

    @cached_property
    def _trigger_sets(self) -> dict[str, frozenset[str]]:
        return {m.id: _compute_trigger_set(self, m.id, self.trigger_mode) for m in self.modules}

    @cached_property
    def triggering_modules(self) -> dict[str, list[str]]:
        """component id -> modules whose trigger set contains it."""
        out: dict[str, list[str]] = {c: [] for c in self.component_map}
        for m in sorted(self.module_map, key=node_key):
            for c in self._trigger_sets[m]:
                out.setdefault(c, []).append(m)
        return out


def _compute_trigger_set(instance: Instance, m: str, mode: TriggerMode) -> frozenset[str]:
    comps = instance.component_map
    if mode is TriggerMode.DIRECT_CHILDREN:
        return frozenset(c for c in instance.children.get(m, ()) if c in comps)
    found: set[str] = set()
    seen = {m}
    stack = [m]
    while stack:
        v = stack.pop()
        for w in instance.children.get(v, ()):
            if w in seen:
                continue
            seen.add(w)
            if w in comps:
                found.add(w)
            else:
                stack.append(w)
    return frozenset(found)


def trigger_set(instance: Instance, m: str, mode: TriggerMode | str | None = None) -> frozenset[str]:
    """Components whose maintenance forces maintenance of module ``m``."""
    if m not in instance.module_map:
        raise InstanceError(f"{m!r} is not a module of the instance")
    if mode is None or TriggerMode(mode) is instance.trigger_mode:
        return instance._trigger_sets[m]
    return _compute_trigger_set(instance, m, TriggerMode(mode))


def validate(instance: Instance) -> list[Violation]:
    """All structural problems of ``instance``; fatal ones make it unusable.

    Non-fatal entries are warnings (a module with an empty trigger set).
    """
    out: list[Violation] = []
    comps = instance.component_map
    mods = instance.module_map
    ids = [c.id for c in instance.components] + [m.id for m in instance.modules]

    seen: set[str] = set()
    for node in ids:
        if not isinstance(node, str) or not node:
            out.append(Violation(None, f"node id must be a nonempty string, got {node!r}"))
        elif node in seen:
            out.append(Violation(node, "duplicate node id"))
        seen.add(node)

    for c in instance.components:
        if isinstance(c.cycle_limit, bool) or not isinstance(c.cycle_limit, int) or c.cycle_limit < 1:
            out.append(Violation(c.id, f"cycle limit must be a positive integer, got {c.cycle_limit!r}"))
        if Fraction(c.setup_cost) < 0:
            out.append(Violation(c.id, "setup cost must be nonnegative"))
    for m in instance.modules:
        if Fraction(m.setup_cost) < 0:
            out.append(Violation(m.id, "setup cost must be nonnegative"))

    if instance.root in comps:
        out.append(Violation(instance.root, "root must be a module"))
    elif instance.root not in mods:
        out.append(Violation(instance.root, "root is not a node of the instance"))

    parents: dict[str, list[str]] = {}
    for parent, child in instance.edges:
        for v in (parent, child):
            if v not in seen:
                out.append(Violation(v, "edge endpoint is not a node of the instance"))
        if parent in comps:
            out.append(Violation(parent, "component must be a leaf"))
        parents.setdefault(child, []).append(parent)

    if instance.root in parents:
        out.append(Violation(instance.root, "not a tree: root has a parent"))
    for child, ps in parents.items():
        if len(ps) > 1:
            out.append(Violation(child, "not a tree: node has several parents"))

    reach = {instance.root}
    stack = [instance.root]
    while stack:
        for w in instance.children.get(stack.pop(), ()):
            if w not in reach:
                reach.add(w)
                stack.append(w)
    for node in sorted(seen - reach, key=node_key):
        out.append(Violation(node, "not a tree: node unreachable from root"))

    for m in mods:
        if not instance.children.get(m):
            out.append(Violation(m, "leaf must be a component"))

    if not any(v.fatal for v in out):
        for m in sorted(mods, key=node_key):
            if not trigger_set(instance, m):
                out.append(Violation(m, "empty trigger set; module contributes zero cost", fatal=False))
    return out


def is_valid(instance: Instance) -> bool:
    return not any(v.fatal for v in validate(instance))


def require_valid(instance: Instance) -> None:
    errors = [v for v in validate(instance) if v.fatal]
    if errors:
        raise InstanceError("invalid instance: " + "; ".join(str(v) for v in errors))


def check_schedule(instance: Instance, schedule: Mapping[str, int]) -> None:
    """Raise InfeasibleSchedule unless ``schedule`` covers exactly the components within limits."""
    for c in instance.component_ids:
        if c not in schedule:
            raise InfeasibleSchedule(f"component {c} has no cycle time", c)
        q = schedule[c]
        if isinstance(q, bool) or not isinstance(q, int) or q < 1:
            raise InfeasibleSchedule(f"component {c}: cycle time must be a positive integer, got {q!r}", c)
        f = instance.component_map[c].cycle_limit
        if q > f:
            raise InfeasibleSchedule(f"component {c}: cycle time {q} exceeds cycle limit {f}", c)
    extra = sorted(set(schedule) - set(instance.component_map), key=node_key)
    if extra:
        raise InfeasibleSchedule(f"schedule names unknown component {extra[0]}", extra[0])


# --- JSON ---------------------------------------------------------------


def instance_from_dict(data: Mapping[str, Any]) -> Instance:
    if not isinstance(data, Mapping):
        raise InstanceError("instance must be a JSON object")
    try:
        nodes = data["nodes"]
        edges = data.get("edges", [])
        root = data["root"]
    except KeyError as exc:
        raise InstanceError(f"instance is missing field {exc.args[0]!r}") from exc
    comps, mods = [], []
    for node in nodes:
        if not isinstance(node, Mapping) or "id" not in node or "kind" not in node:
            raise InstanceError(f"malformed node {node!r}")
        nid = str(node["id"])
        cost = parse_rational(node.get("setup_cost", 0))
        if node["kind"] == "component":
            if "cycle_limit" not in node:
                raise InstanceError(f"component {nid} has no cycle_limit")
            comps.append(Component(nid, cost, node["cycle_limit"]))
        elif node["kind"] == "module":
            mods.append(Module(nid, cost))
        else:
            raise InstanceError(f"node {nid}: unknown kind {node['kind']!r}")
    if any(not isinstance(e, (list, tuple)) or len(e) != 2 for e in edges):
        raise InstanceError("edges must be [parent, child] pairs")
    try:
        mode = TriggerMode(data.get("trigger_mode", TriggerMode.DESCENDANTS.value))
    except ValueError as exc:
        raise InstanceError(f"unknown trigger_mode {data.get('trigger_mode')!r}") from exc
    return Instance(tuple(comps), tuple(mods), tuple((str(a), str(b)) for a, b in edges), str(root), mode)


def instance_to_dict(instance: Instance) -> dict[str, Any]:
    nodes: list[dict[str, Any]] = []
    for m in instance.modules:
        nodes.append({"id": m.id, "kind": "module", "setup_cost": format_rational(Fraction(m.setup_cost))})
    for c in instance.components:
        nodes.append(
            {
                "id": c.id,
                "kind": "component",
                "setup_cost": format_rational(Fraction(c.setup_cost)),
                "cycle_limit": c.cycle_limit,
            }
        )
    nodes.sort(key=lambda n: node_key(n["id"]))
    return {
        "root": instance.root,
        "trigger_mode": instance.trigger_mode.value,
        "nodes": nodes,
        "edges": [list(e) for e in instance.edges],
    }


def dumps_instance(instance: Instance) -> str:
    return json.dumps(instance_to_dict(instance))


def loads_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"malformed JSON: {exc}") from exc
    return instance_from_dict(data)


def load_instance(path: str | Path) -> Instance:
    return loads_instance(Path(path).read_text())


def schedule_from_dict(data: Any) -> dict[str, int]:
    if not isinstance(data, Mapping):
        raise InstanceError("schedule must be a JSON object mapping component id to cycle time")
    out = {}
    for k, v in data.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise InstanceError(f"cycle time for {k} must be an integer, got {v!r}")
        out[str(k)] = v
    return out


def loads_schedule(text: str) -> dict[str, int]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"malformed schedule JSON: {exc}") from exc
    return schedule_from_dict(data)


def dumps_schedule(schedule: Mapping[str, int]) -> str:
    return json.dumps({k: schedule[k] for k in sorted(schedule, key=node_key)})
