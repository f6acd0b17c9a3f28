"""Rule-based scene-graph extraction over the canonical token stream.

The pipeline re-joins hyphenated compounds ("two - way" -> "two-way"),
collapses bracketed sign names into a single value, merges multiword
lexicon entries ("traffic light"), classifies every token against the
domain lexicon, splits the sentence into clauses, and then runs the
pattern rules from the grammar file against each clause. Words the
lexicon does not know are skipped; nothing is ever invented.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..tokenizer import TokenStream
from .lexicon import DomainLexicon

# item classes
OBJ = "obj"
ATTR = "attr"
NUM = "num"
VERB = "verb"
BE = "be"
LOCPREP = "locprep"
PREP = "prep"
ADV = "adv"
SIGN = "sign"
DET = "det"
COORD = "coord"
PUNCT = "punct"
UNKNOWN = "unknown"

_ALWAYS_SKIP = {DET, COORD, PUNCT, UNKNOWN}
_SKIP_UNLESS_SOUGHT = {ATTR, NUM, ADV, SIGN}


@dataclass(frozen=True)
class Item:
    cls: str
    value: str
    surface: str


@dataclass(frozen=True)
class SceneGraph:
    objects: frozenset[str]
    attributes: frozenset[tuple[str, str]]
    relations: frozenset[tuple[str, str, str]]

    @property
    def empty(self) -> bool:
        return not self.objects


def tuples(graph: SceneGraph) -> frozenset[tuple[str, ...]]:
    """Logical tuples of a graph: objects, attribute pairs, relation triples."""
    singles = {(obj,) for obj in graph.objects}
    pairs = {(obj, attr) for obj, attr in graph.attributes}
    triples = set(graph.relations)
    return frozenset(singles | pairs | triples)


@dataclass(frozen=True)
class _Atom:
    kind: str  # "class", "literal" or "wildcard"
    value: str = ""


@dataclass(frozen=True)
class _Rule:
    group: str  # "attr" | "rel"
    atoms: tuple[_Atom, ...]
    emit_kind: str  # "attr" | "rel"
    emit_args: tuple[str, ...]
    source: str


_CLASS_ATOMS = {OBJ, ATTR, NUM, VERB, BE, LOCPREP, PREP, ADV, SIGN}


def _parse_atom(text: str) -> _Atom:
    if text == "*":
        return _Atom("wildcard")
    if text.startswith("<") and text.endswith(">"):
        name = text[1:-1]
        if name not in _CLASS_ATOMS:
            raise ValueError(f"unknown pattern class <{name}>")
        return _Atom("class", name)
    return _Atom("literal", text)


def parse_grammar(text: str) -> list[_Rule]:
    rules = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("version"):
            continue
        try:
            head, emit = line.split("=>")
            parts = head.split()
            group = parts[0]
            if group not in ("attr", "rel"):
                raise ValueError(f"rule group must be 'attr' or 'rel', got {group!r}")
            atoms = tuple(_parse_atom(p) for p in parts[1:])
            emit = emit.strip()
            kind, _, args = emit.partition("(")
            if kind not in ("attr", "rel") or not args.endswith(")"):
                raise ValueError(f"bad emission {emit!r}")
            emit_args = tuple(a.strip() for a in args[:-1].split(","))
            rules.append(_Rule(group, atoms, kind, emit_args, line))
        except ValueError as err:
            raise ValueError(f"grammar line {lineno}: {err}") from err
    return rules


def default_grammar() -> list[_Rule]:
    text = resources.files("scenedesc.data").joinpath("grammar.rules").read_text(encoding="utf-8")
    return parse_grammar(text)


def load_grammar(path: str | Path) -> list[_Rule]:
    return parse_grammar(Path(path).read_text(encoding="utf-8"))


def _classify(surface: str, lexicon: DomainLexicon) -> Item:
    if surface in lexicon.counts:
        return Item(NUM, lexicon.counts[surface], surface)
    if surface.isdigit():
        return Item(NUM, surface, surface)
    if surface in lexicon.copulas:
        return Item(BE, surface, surface)
    if surface in lexicon.verbs:
        return Item(VERB, lexicon.verbs[surface], surface)
    if surface in lexicon.locative_prepositions:
        return Item(LOCPREP, lexicon.locative_prepositions[surface], surface)
    if surface in lexicon.prepositions:
        return Item(PREP, lexicon.prepositions[surface], surface)
    if surface in lexicon.adverbs:
        return Item(ADV, lexicon.adverbs[surface], surface)
    if surface in lexicon.determiners:
        return Item(DET, surface, surface)
    if surface in lexicon.coordinators:
        return Item(COORD, surface, surface)
    if surface in lexicon.attributes:
        return Item(ATTR, surface, surface)
    if surface in lexicon.objects:
        return Item(OBJ, lexicon.objects[surface], surface)
    if surface in lexicon.splitters:
        return Item("splitter", surface, surface)
    if not surface[0].isalnum():
        return Item(PUNCT, surface, surface)
    return Item(UNKNOWN, surface, surface)


def _preprocess(stream: TokenStream, lexicon: DomainLexicon) -> list[Item]:
    surfaces = list(stream.surfaces)

    # re-join hyphenated compounds the tokenizer split apart
    joined: list[str] = []
    i = 0
    while i < len(surfaces):
        if (
            i + 2 < len(surfaces)
            and surfaces[i + 1] == "-"
            and surfaces[i] not in ("[", "]")
            and surfaces[i + 2] not in ("[", "]")
        ):
            joined.append(surfaces[i] + "-" + surfaces[i + 2])
            i += 3
        else:
            joined.append(surfaces[i])
            i += 1

    # collapse bracketed sign names into a single value
    merged: list[Item | str] = []
    i = 0
    while i < len(joined):
        if joined[i] == "[":
            close = next((j for j in range(i + 1, min(i + 8, len(joined))) if joined[j] == "]"), None)
            if close is not None and close > i + 1:
                name = " ".join(joined[i + 1 : close])
                merged.append(Item(SIGN, name, name))
                i = close + 1
                continue
        merged.append(joined[i])
        i += 1

    # merge multiword lexicon entries (longest match first)
    compound_tables = [(lexicon.compounds, OBJ), (lexicon.adverb_compounds, ADV)]
    max_len = max((len(k) for table, _ in compound_tables for k in table), default=1)
    items: list[Item] = []
    i = 0
    while i < len(merged):
        if isinstance(merged[i], Item):
            items.append(merged[i])  # type: ignore[arg-type]
            i += 1
            continue
        matched = False
        for length in range(max_len, 1, -1):
            window = merged[i : i + length]
            if len(window) < length or any(isinstance(w, Item) for w in window):
                continue
            key = tuple(window)  # type: ignore[arg-type]
            for table, cls in compound_tables:
                if key in table:
                    items.append(Item(cls, table[key], " ".join(key)))
                    i += length
                    matched = True
                    break
            if matched:
                break
        if not matched:
            items.append(_classify(merged[i], lexicon))  # type: ignore[arg-type]
            i += 1
    return items


def _split_clauses(items: list[Item]) -> list[list[Item]]:
    clauses: list[list[Item]] = [[]]
    for index, item in enumerate(items):
        nxt = next((x for x in items[index + 1 :] if x.cls != PUNCT), None)
        is_comma = item.cls == PUNCT and item.surface == ","
        is_coord = item.cls == COORD
        if item.cls == "splitter" or ((is_comma or is_coord) and (nxt is None or nxt.cls != ATTR)):
            if clauses[-1]:
                clauses.append([])
            continue
        clauses[-1].append(item)
    return [clause for clause in clauses if clause]


def _atom_matches(atom: _Atom, item: Item) -> bool:
    if atom.kind == "class":
        return item.cls == atom.value
    if atom.kind == "literal":
        return item.surface == atom.value
    return False


def _skippable(item: Item, atom: _Atom) -> bool:
    if item.cls in _ALWAYS_SKIP or item.cls == "splitter":
        return True
    if item.cls in _SKIP_UNLESS_SOUGHT:
        return not (atom.kind == "class" and atom.value == item.cls) and not (
            atom.kind == "literal" and atom.value == item.surface
        )
    return False


def _try_match(rule: _Rule, clause: list[Item], anchor: int) -> list[int | None] | None:
    if not _atom_matches(rule.atoms[0], clause[anchor]):
        return None
    bindings: list[int | None] = [anchor]
    pos = anchor + 1
    after_wildcard = False
    for atom in rule.atoms[1:]:
        if atom.kind == "wildcard":
            bindings.append(None)
            after_wildcard = True
            continue
        found = None
        j = pos
        while j < len(clause):
            if _atom_matches(atom, clause[j]):
                found = j
                break
            if after_wildcard or _skippable(clause[j], atom):
                j += 1
                continue
            return None
        if found is None:
            return None
        bindings.append(found)
        pos = found + 1
        after_wildcard = False
    return bindings


def _continuations(rule: _Rule, clause: list[Item], bindings: list[int | None]) -> list[int]:
    """Extra bindings for a trailing <attr>/<num> atom ("wet and slippery")."""
    last_atom = rule.atoms[-1]
    if last_atom.kind != "class" or last_atom.value not in (ATTR, NUM):
        return []
    extras = []
    j = bindings[-1] + 1  # type: ignore[operator]
    while j < len(clause):
        if _atom_matches(last_atom, clause[j]):
            extras.append(j)
            j += 1
            continue
        if _skippable(clause[j], last_atom):
            j += 1
            continue
        break
    return extras


def _emit(rule: _Rule, clause: list[Item], bindings: list[int | None]) -> tuple[str, tuple[str, ...]]:
    def resolve(arg: str) -> str:
        if "~" in arg:
            return "-".join(resolve(part) for part in arg.split("~"))
        if arg.startswith("$"):
            index = int(arg[1:]) - 1
            bound = bindings[index]
            if bound is None:
                raise ValueError(f"rule {rule.source!r} references unbound atom {arg}")
            return clause[bound].value
        return arg

    return rule.emit_kind, tuple(resolve(arg) for arg in rule.emit_args)


def parse_scene_graph(
    stream: TokenStream,
    lexicon: DomainLexicon | None = None,
    grammar: list[_Rule] | None = None,
) -> SceneGraph:
    """Extract objects, attributes and relations from one description."""
    lexicon = lexicon if lexicon is not None else default_lexicon_cached()
    grammar = grammar if grammar is not None else default_grammar_cached()
    items = _preprocess(stream, lexicon)

    objects: set[str] = {item.value for item in items if item.cls == OBJ}
    attributes: set[tuple[str, str]] = set()
    relations: set[tuple[str, str, str]] = set()

    for clause in _split_clauses(items):
        for rule in (r for r in grammar if r.group == "attr"):
            for anchor in range(len(clause)):
                bindings = _try_match(rule, clause, anchor)
                if bindings is None:
                    continue
                kind, args = _emit(rule, clause, bindings)
                attributes.add((args[0], args[1]))
                for extra in _continuations(rule, clause, bindings):
                    kind, args = _emit(rule, clause, bindings[:-1] + [extra])
                    attributes.add((args[0], args[1]))
        for rule in (r for r in grammar if r.group == "rel"):
            matched = False
            for anchor in range(len(clause)):
                bindings = _try_match(rule, clause, anchor)
                if bindings is None:
                    continue
                kind, args = _emit(rule, clause, bindings)
                if kind == "rel":
                    relations.add((args[0], args[1], args[2]))
                else:
                    attributes.add((args[0], args[1]))
                matched = True
                break
            if matched:
                break

    attributes = {(obj, attr) for obj, attr in attributes if obj in objects}
    relations = {(a, rel, b) for a, rel, b in relations if a in objects and b in objects}
    return SceneGraph(frozenset(objects), frozenset(attributes), frozenset(relations))


_default_lexicon: DomainLexicon | None = None
_default_grammar: list[_Rule] | None = None


def default_lexicon_cached() -> DomainLexicon:
    global _default_lexicon
    if _default_lexicon is None:
        from .lexicon import default_lexicon

        _default_lexicon = default_lexicon()
    return _default_lexicon


def default_grammar_cached() -> list[_Rule]:
    global _default_grammar
    if _default_grammar is None:
        _default_grammar = default_grammar()
    return _default_grammar
