"""Line-oriented declaration language for rings, spaces, bundles and facts.

Grammar (statements end with ';', blocks use braces, '#' comments to EOL):

    document    := declaration*
    declaration := ring | space | bundle | product | known
    ring        := "ring" NAME "over" MODULUS "{" (gen | rel)* "}"
    gen         := "gen" NAME ":" "deg" INT attr* ";"
    attr        := "trunc" INT | "exterior" | "weight" INT
    rel         := "rel" NAME "^" INT "=" target ";"
    target      := "0" | [INT "*"] power ("*" power)*
    power       := NAME ["^" INT]
    space       := "space" NAME "{" space_stmt* "}"
    space_stmt  := "dim" INT ";" | "connectivity" INT ";"
                 | "cohomology" NAME "over" MODULUS ["complete"] ";"
                 | "loopspace-even" ";"
                 | "stage" INT "dim" INT ["skeleton"] STRING ";"
                 | "known" [qual] inv "=" INT "from" STRING ";"
    bundle      := "bundle" NAME "{" bundle_stmt* "}"
    bundle_stmt := "fiber" NAME ";" | "base" NAME ";" | "total" NAME ";"
                 | "structure-group" NAME ";" | "cells-mod" INT INT ";"
                 | "compatibility" cert ";"
    cert        := "skeletal" | "trivial" | "none" | "verified" STRING
    product     := "product" NAME "=" NAME "*" NAME ";"
    known       := "known" [qual] NAME inv "=" INT "from" STRING ";"
    qual        := "lower" | "upper" | "exact"          (default "exact")
    inv         := "cup" | "sigmacat" | "cat" | "Cat" | "wcat"
    MODULUS     := identifier of the form Z/<prime>
    NAME        := letter, then letters, digits, "_", "(", ")", "/", "-"

"exterior" is sugar for "trunc 2".  "cells-mod d s" states that the base's
cells sit in dimensions congruent to 0..s mod d.  A top-level "known" names
the space it concerns; inside a space block the space is implicit.  Parsing
is total: errors become diagnostics with line and column, the offending
declaration is dropped whole, and parsing resumes at the next declaration.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import AlgebraError, RingPresentation, Substitution

INVARIANTS = ("cup", "sigmacat", "cat", "Cat", "wcat")
QUALIFIERS = ("lower", "upper", "exact")
_TOP_KEYWORDS = ("ring", "space", "bundle", "product", "known")

_IDENT_START = set(string.ascii_letters)
_IDENT_CHARS = set(string.ascii_letters + string.digits + "_()/-")
_PUNCT = set("{};:=^*")


class DslError(ValueError):
    """Internal parse failure; always converted into a Diagnostic."""


@dataclass(frozen=True)
class Diagnostic:
    line: int
    col: int
    message: str

    def __str__(self):
        return f"{self.line}:{self.col}: {self.message}"


@dataclass(frozen=True)
class Token:
    kind: str  # ident | int | string | punct | eof
    value: str
    line: int
    col: int


# -- AST -------------------------------------------------------------------


@dataclass
class GenDecl:
    name: str
    degree: int
    trunc: int | None = None
    weight: int = 1


@dataclass
class RelDecl:
    gen: str
    exponent: int
    coeff: int
    powers: tuple[tuple[str, int], ...]


@dataclass
class RingDecl:
    name: str
    p: int
    gens: list[GenDecl] = field(default_factory=list)
    rels: list[RelDecl] = field(default_factory=list)
    line: int = field(default=0, compare=False)

    kind = "ring"


@dataclass
class KnownFact:
    space: str | None
    invariant: str
    qualifier: str
    value: int
    citation: str
    line: int = field(default=0, compare=False)

    kind = "fact"

    @property
    def name(self):
        return f"{self.space}:{self.invariant}"


@dataclass
class StageDecl:
    index: int
    dim: int
    skeleton: bool
    description: str


@dataclass
class CohomologyRef:
    ring: str
    p: int
    complete: bool = False


@dataclass
class SpaceDecl:
    name: str
    dim: int | None = None
    connectivity: int | None = None
    cohomology: CohomologyRef | None = None
    loopspace_even: bool = False
    knowns: list[KnownFact] = field(default_factory=list)
    stages: list[StageDecl] = field(default_factory=list)
    line: int = field(default=0, compare=False)

    kind = "space"


@dataclass
class BundleDecl:
    name: str
    fiber: str
    base: str
    total: str
    structure_group: str
    d: int
    s: int
    cert_kind: str = "none"
    cert_reason: str = ""
    line: int = field(default=0, compare=False)

    kind = "bundle"


@dataclass
class ProductDecl:
    total: str
    left: str
    right: str
    line: int = field(default=0, compare=False)

    kind = "product"

    @property
    def name(self):
        return self.total


Declaration = RingDecl | SpaceDecl | BundleDecl | ProductDecl | KnownFact


@dataclass
class SourceDocument:
    path: str | None
    declarations: list[Declaration]
    diagnostics: list[Diagnostic]

    @property
    def ok(self) -> bool:
        return not self.diagnostics


# -- lexer -------------------------------------------------------------------


def _lex(text: str) -> tuple[list[Token], list[Diagnostic]]:
    tokens: list[Token] = []
    diags: list[Diagnostic] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_line, start_col = line, col
        if ch == '"':
            i += 1
            col += 1
            buf = []
            closed = False
            while i < n:
                c = text[i]
                if c == "\n":
                    break
                if c == "\\" and i + 1 < n and text[i + 1] in '"\\':
                    buf.append(text[i + 1])
                    i += 2
                    col += 2
                    continue
                if c == '"':
                    i += 1
                    col += 1
                    closed = True
                    break
                buf.append(c)
                i += 1
                col += 1
            if not closed:
                diags.append(
                    Diagnostic(start_line, start_col, "unterminated string literal")
                )
            tokens.append(Token("string", "".join(buf), start_line, start_col))
            continue
        if ch in _PUNCT:
            tokens.append(Token("punct", ch, start_line, start_col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        if ch in _IDENT_START:
            j = i
            while j < n and text[j] in _IDENT_CHARS:
                j += 1
            tokens.append(Token("ident", text[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        diags.append(
            Diagnostic(start_line, start_col, f"unexpected character {ch!r}")
        )
        i += 1
        col += 1
    tokens.append(Token("eof", "", line, col))
    return tokens, diags


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token], diags: list[Diagnostic]):
        self.tokens = tokens
        self.pos = 0
        self.diags = diags

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def error(self, tok: Token, message: str) -> DslError:
        return DslError(f"{tok.line}:{tok.col}:{message}")

    def report(self, tok: Token, message: str) -> None:
        self.diags.append(Diagnostic(tok.line, tok.col, message))

    def expect_punct(self, value: str) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.value != value:
            raise self.error(tok, f"expected {value!r}, found {tok.value!r}")
        return self.advance()

    def expect_ident(self, what: str = "identifier") -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            raise self.error(tok, f"expected {what}, found {tok.value!r}")
        return self.advance()

    def expect_keyword(self, word: str) -> Token:
        tok = self.peek()
        if tok.kind != "ident" or tok.value != word:
            raise self.error(tok, f"expected {word!r}, found {tok.value!r}")
        return self.advance()

    def expect_int(self, what: str = "integer") -> int:
        tok = self.peek()
        if tok.kind != "int":
            raise self.error(tok, f"expected {what}, found {tok.value!r}")
        self.advance()
        return int(tok.value)

    def expect_string(self, what: str = "string") -> str:
        tok = self.peek()
        if tok.kind != "string":
            raise self.error(tok, f"expected {what}, found {tok.value!r}")
        self.advance()
        return tok.value

    def at_ident(self, value: str) -> bool:
        tok = self.peek()
        return tok.kind == "ident" and tok.value == value

    def skip_declaration(self) -> None:
        """Panic-mode recovery: drop tokens until the next top-level keyword
        at brace depth zero."""
        depth = 0
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                return
            if tok.kind == "punct" and tok.value == "{":
                depth += 1
            elif tok.kind == "punct" and tok.value == "}":
                if depth > 0:
                    depth -= 1
                    self.advance()
                    if depth == 0:
                        return
                    continue
            elif (
                depth == 0
                and tok.kind == "ident"
                and tok.value in _TOP_KEYWORDS
            ):
                return
            self.advance()

    # -- declarations ------------------------------------------------------

    def parse_document(self, path: str | None) -> SourceDocument:
        decls: list[Declaration] = []
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                break
            try:
                if self.at_ident("ring"):
                    decls.append(self.parse_ring())
                elif self.at_ident("space"):
                    decls.append(self.parse_space())
                elif self.at_ident("bundle"):
                    decls.append(self.parse_bundle())
                elif self.at_ident("product"):
                    decls.append(self.parse_product())
                elif self.at_ident("known"):
                    decls.append(self.parse_known_top())
                else:
                    raise self.error(
                        tok, f"unknown declaration keyword {tok.value!r}"
                    )
            except DslError as exc:
                line, col, message = str(exc).split(":", 2)
                self.diags.append(Diagnostic(int(line), int(col), message))
                if self.peek() is tok:
                    # nothing was consumed; step past the bad token so
                    # recovery always makes progress
                    self.advance()
                self.skip_declaration()
        return SourceDocument(path, decls, self.diags)

    def parse_modulus(self) -> int:
        tok = self.expect_ident("a modulus of the form Z/<p>")
        if not tok.value.startswith("Z/"):
            raise self.error(tok, f"expected a modulus Z/<p>, found {tok.value!r}")
        digits = tok.value[2:]
        if not digits.isdigit():
            raise self.error(tok, f"expected a modulus Z/<p>, found {tok.value!r}")
        return int(digits)

    def parse_ring(self) -> RingDecl:
        start = self.expect_keyword("ring")
        name = self.expect_ident("ring name").value
        self.expect_keyword("over")
        p = self.parse_modulus()
        decl = RingDecl(name, p, line=start.line)
        self.expect_punct("{")
        while not (self.peek().kind == "punct" and self.peek().value == "}"):
            if self.peek().kind == "eof":
                raise self.error(self.peek(), f"unclosed ring block {name!r}")
            if self.at_ident("gen"):
                decl.gens.append(self.parse_gen())
            elif self.at_ident("rel"):
                decl.rels.append(self.parse_rel())
            else:
                raise self.error(
                    self.peek(),
                    f"unknown ring statement {self.peek().value!r} "
                    "(expected gen or rel)",
                )
        self.expect_punct("}")
        self.validate_ring(decl, start)
        return decl

    def parse_gen(self) -> GenDecl:
        self.expect_keyword("gen")
        name = self.expect_ident("generator name").value
        self.expect_punct(":")
        self.expect_keyword("deg")
        degree = self.expect_int("degree")
        trunc: int | None = None
        weight = 1
        while not (self.peek().kind == "punct" and self.peek().value == ";"):
            tok = self.peek()
            if self.at_ident("trunc"):
                self.advance()
                if trunc is not None:
                    raise self.error(tok, f"generator {name!r}: repeated truncation")
                trunc = self.expect_int("truncation")
            elif self.at_ident("exterior"):
                self.advance()
                if trunc is not None:
                    raise self.error(tok, f"generator {name!r}: repeated truncation")
                trunc = 2
            elif self.at_ident("weight"):
                self.advance()
                weight = self.expect_int("weight")
            else:
                raise self.error(
                    tok, f"unknown generator attribute {tok.value!r}"
                )
        self.expect_punct(";")
        return GenDecl(name, degree, trunc, weight)

    def parse_rel(self) -> RelDecl:
        self.expect_keyword("rel")
        gen = self.expect_ident("generator name").value
        self.expect_punct("^")
        exponent = self.expect_int("exponent")
        self.expect_punct("=")
        coeff = 1
        powers: list[tuple[str, int]] = []
        tok = self.peek()
        if tok.kind == "int":
            coeff = self.expect_int()
            if coeff == 0:
                self.expect_punct(";")
                return RelDecl(gen, exponent, 0, ())
            self.expect_punct("*")
        while True:
            pname = self.expect_ident("generator name").value
            pexp = 1
            if self.peek().kind == "punct" and self.peek().value == "^":
                self.advance()
                pexp = self.expect_int("exponent")
            powers.append((pname, pexp))
            if self.peek().kind == "punct" and self.peek().value == "*":
                self.advance()
                continue
            break
        self.expect_punct(";")
        return RelDecl(gen, exponent, coeff, tuple(powers))

    def validate_ring(self, decl: RingDecl, start: Token) -> None:
        if not decl.gens:
            raise self.error(
                start, f"ring {decl.name!r} must declare at least one generator"
            )
        try:
            ring_presentation(decl)
        except AlgebraError as exc:
            raise self.error(start, f"ring {decl.name!r}: {exc}") from None

    def parse_space(self) -> SpaceDecl:
        start = self.expect_keyword("space")
        name = self.expect_ident("space name").value
        decl = SpaceDecl(name, line=start.line)
        self.expect_punct("{")
        while not (self.peek().kind == "punct" and self.peek().value == "}"):
            tok = self.peek()
            if tok.kind == "eof":
                raise self.error(tok, f"unclosed space block {name!r}")
            if self.at_ident("dim"):
                self.advance()
                if decl.dim is not None:
                    raise self.error(tok, f"space {name!r}: repeated dim")
                decl.dim = self.expect_int("dimension")
                self.expect_punct(";")
            elif self.at_ident("connectivity"):
                self.advance()
                if decl.connectivity is not None:
                    raise self.error(tok, f"space {name!r}: repeated connectivity")
                decl.connectivity = self.expect_int("connectivity")
                self.expect_punct(";")
            elif self.at_ident("cohomology"):
                self.advance()
                if decl.cohomology is not None:
                    raise self.error(tok, f"space {name!r}: repeated cohomology")
                ring = self.expect_ident("ring name").value
                self.expect_keyword("over")
                p = self.parse_modulus()
                complete = False
                if self.at_ident("complete"):
                    self.advance()
                    complete = True
                self.expect_punct(";")
                decl.cohomology = CohomologyRef(ring, p, complete)
            elif self.at_ident("loopspace-even"):
                self.advance()
                self.expect_punct(";")
                decl.loopspace_even = True
            elif self.at_ident("stage"):
                self.advance()
                index = self.expect_int("stage index")
                self.expect_keyword("dim")
                dim = self.expect_int("stage dimension")
                skeleton = False
                if self.at_ident("skeleton"):
                    self.advance()
                    skeleton = True
                description = self.expect_string("stage description")
                self.expect_punct(";")
                decl.stages.append(StageDecl(index, dim, skeleton, description))
            elif self.at_ident("known"):
                decl.knowns.append(self.parse_known_body(space=name))
            else:
                raise self.error(
                    tok, f"unknown space statement {tok.value!r}"
                )
        self.expect_punct("}")
        for k, st in enumerate(decl.stages, start=1):
            if st.index != k:
                raise self.error(
                    start,
                    f"space {name!r}: stages must be numbered 1..m in order",
                )
            if st.dim < 1:
                raise self.error(
                    start, f"space {name!r}: stage {st.index} needs dim >= 1"
                )
        return decl

    def parse_known_body(self, space: str | None) -> KnownFact:
        start = self.expect_keyword("known")
        qualifier = "exact"
        if self.peek().kind == "ident" and self.peek().value in QUALIFIERS:
            qualifier = self.advance().value
        tok = self.peek()
        if tok.kind != "ident" or tok.value not in INVARIANTS:
            raise self.error(
                tok,
                f"expected an invariant {'/'.join(INVARIANTS)}, found {tok.value!r}",
            )
        invariant = self.advance().value
        self.expect_punct("=")
        value = self.expect_int("value")
        self.expect_keyword("from")
        citation = self.expect_string("citation")
        self.expect_punct(";")
        return KnownFact(space, invariant, qualifier, value, citation, line=start.line)

    def parse_known_top(self) -> KnownFact:
        start = self.expect_keyword("known")
        qualifier = "exact"
        if self.peek().kind == "ident" and self.peek().value in QUALIFIERS:
            qualifier = self.advance().value
        tok = self.peek()
        if (
            tok.kind == "ident"
            and tok.value in INVARIANTS
            and self.peek(1).kind == "punct"
            and self.peek(1).value == "="
        ):
            raise self.error(
                tok, "a top-level known fact must name the space it concerns"
            )
        space = self.expect_ident("space name").value
        tok = self.peek()
        if tok.kind != "ident" or tok.value not in INVARIANTS:
            raise self.error(
                tok,
                f"expected an invariant {'/'.join(INVARIANTS)}, found {tok.value!r}",
            )
        invariant = self.advance().value
        self.expect_punct("=")
        value = self.expect_int("value")
        self.expect_keyword("from")
        citation = self.expect_string("citation")
        self.expect_punct(";")
        return KnownFact(space, invariant, qualifier, value, citation, line=start.line)

    def parse_bundle(self) -> BundleDecl:
        start = self.expect_keyword("bundle")
        name = self.expect_ident("bundle name").value
        fields: dict[str, object] = {}
        cert_kind, cert_reason = "none", ""
        self.expect_punct("{")
        while not (self.peek().kind == "punct" and self.peek().value == "}"):
            tok = self.peek()
            if tok.kind == "eof":
                raise self.error(tok, f"unclosed bundle block {name!r}")
            if tok.kind == "ident" and tok.value in (
                "fiber",
                "base",
                "total",
                "structure-group",
            ):
                key = self.advance().value
                if key in fields:
                    raise self.error(tok, f"bundle {name!r}: repeated {key}")
                fields[key] = self.expect_ident(f"{key} space name").value
                self.expect_punct(";")
            elif self.at_ident("cells-mod"):
                self.advance()
                if "d" in fields:
                    raise self.error(tok, f"bundle {name!r}: repeated cells-mod")
                fields["d"] = self.expect_int("period d")
                fields["s"] = self.expect_int("residue bound s")
                self.expect_punct(";")
            elif self.at_ident("compatibility"):
                self.advance()
                if cert_kind != "none":
                    raise self.error(tok, f"bundle {name!r}: repeated compatibility")
                kind_tok = self.expect_ident("certificate kind")
                if kind_tok.value == "verified":
                    cert_kind = "verified"
                    cert_reason = self.expect_string("justification")
                elif kind_tok.value in ("skeletal", "trivial", "none"):
                    cert_kind = kind_tok.value
                else:
                    raise self.error(
                        kind_tok,
                        f"unknown certificate kind {kind_tok.value!r}",
                    )
                self.expect_punct(";")
            else:
                raise self.error(tok, f"unknown bundle statement {tok.value!r}")
        self.expect_punct("}")
        for key in ("fiber", "base", "total", "structure-group", "d"):
            if key not in fields:
                label = "cells-mod" if key == "d" else key
                raise self.error(start, f"bundle {name!r} is missing {label}")
        d, s = fields["d"], fields["s"]
        if d < 1:
            raise self.error(start, f"bundle {name!r}: d must be >= 1")
        if not 0 <= s <= d - 1:
            raise self.error(
                start, f"bundle {name!r}: s must satisfy 0 <= s <= d-1"
            )
        return BundleDecl(
            name,
            fiber=fields["fiber"],
            base=fields["base"],
            total=fields["total"],
            structure_group=fields["structure-group"],
            d=d,
            s=s,
            cert_kind=cert_kind,
            cert_reason=cert_reason,
            line=start.line,
        )

    def parse_product(self) -> ProductDecl:
        start = self.expect_keyword("product")
        total = self.expect_ident("space name").value
        self.expect_punct("=")
        left = self.expect_ident("factor name").value
        self.expect_punct("*")
        right = self.expect_ident("factor name").value
        self.expect_punct(";")
        return ProductDecl(total, left, right, line=start.line)


def parse(text: str, path: str | None = None) -> SourceDocument:
    """Parse a document.  Total: every failure lands in diagnostics."""
    tokens, lex_diags = _lex(text)
    parser = _Parser(tokens, lex_diags)
    return parser.parse_document(path)


def ring_presentation(decl: RingDecl) -> RingPresentation:
    """Build the algebra object a ring declaration denotes (validating it)."""
    subs: dict[str, Substitution] = {}
    for rel in decl.rels:
        if rel.gen in subs:
            raise AlgebraError(f"two relations on generator {rel.gen!r}")
        subs[rel.gen] = Substitution(rel.exponent, rel.coeff, rel.powers)
    return RingPresentation(
        decl.p,
        [(g.name, g.degree, g.trunc, g.weight) for g in decl.gens],
        substitutions=subs,
        name=decl.name,
    )


# -- renderer ----------------------------------------------------------------


def _render_known(fact: KnownFact, top_level: bool) -> str:
    qual = "" if fact.qualifier == "exact" else f" {fact.qualifier}"
    space = f" {fact.space}" if top_level else ""
    citation = fact.citation.replace("\\", "\\\\").replace('"', '\\"')
    return (
        f"known{qual}{space} {fact.invariant} = {fact.value} "
        f'from "{citation}";'
    )


def render(doc: SourceDocument) -> str:
    """Serialize declarations back to DSL text.  render/parse round-trips to
    structurally equal declarations (sugar is normalized, comments dropped)."""
    out: list[str] = []
    for decl in doc.declarations:
        if isinstance(decl, RingDecl):
            out.append(f"ring {decl.name} over Z/{decl.p} {{")
            for g in decl.gens:
                attrs = ""
                if g.trunc is not None:
                    attrs += f" trunc {g.trunc}"
                if g.weight != 1:
                    attrs += f" weight {g.weight}"
                out.append(f"  gen {g.name} : deg {g.degree}{attrs};")
            for r in decl.rels:
                if r.coeff == 0:
                    rhs = "0"
                else:
                    parts = [
                        name if e == 1 else f"{name}^{e}" for name, e in r.powers
                    ]
                    rhs = " * ".join(parts)
                    if r.coeff != 1:
                        rhs = f"{r.coeff} * {rhs}"
                out.append(f"  rel {r.gen}^{r.exponent} = {rhs};")
            out.append("}")
        elif isinstance(decl, SpaceDecl):
            out.append(f"space {decl.name} {{")
            if decl.dim is not None:
                out.append(f"  dim {decl.dim};")
            if decl.connectivity is not None:
                out.append(f"  connectivity {decl.connectivity};")
            if decl.cohomology is not None:
                ref = decl.cohomology
                complete = " complete" if ref.complete else ""
                out.append(f"  cohomology {ref.ring} over Z/{ref.p}{complete};")
            if decl.loopspace_even:
                out.append("  loopspace-even;")
            for st in decl.stages:
                skel = " skeleton" if st.skeleton else ""
                desc = st.description.replace("\\", "\\\\").replace('"', '\\"')
                out.append(f'  stage {st.index} dim {st.dim}{skel} "{desc}";')
            for fact in decl.knowns:
                out.append("  " + _render_known(fact, top_level=False))
            out.append("}")
        elif isinstance(decl, BundleDecl):
            out.append(f"bundle {decl.name} {{")
            out.append(f"  fiber {decl.fiber};")
            out.append(f"  base {decl.base};")
            out.append(f"  total {decl.total};")
            out.append(f"  structure-group {decl.structure_group};")
            out.append(f"  cells-mod {decl.d} {decl.s};")
            if decl.cert_kind == "verified":
                reason = decl.cert_reason.replace("\\", "\\\\").replace('"', '\\"')
                out.append(f'  compatibility verified "{reason}";')
            elif decl.cert_kind != "none":
                out.append(f"  compatibility {decl.cert_kind};")
            out.append("}")
        elif isinstance(decl, ProductDecl):
            out.append(f"product {decl.total} = {decl.left} * {decl.right};")
        elif isinstance(decl, KnownFact):
            out.append(_render_known(decl, top_level=True))
        out.append("")
    return "\n".join(out)
