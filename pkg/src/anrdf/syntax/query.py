"""AnQL query parser.

    SELECT ?p ?l ?c WHERE {
        (?p type ebayEmp):?l
        OPTIONAL{(?p hasCar ?c):?l}
    }

Patterns inside WHERE combine left to right: runs of triple patterns
form a basic annotated pattern, groups join with AND (or with UNION when
written `{...} UNION {...}`), OPTIONAL attaches to everything parsed so
far, and FILTER/ASSIGN/GROUPBY/ORDERBY/LIMIT/sub-SELECT wrap it.  A
FILTER written last inside an OPTIONAL group becomes the optional's
guard expression, which may mention variables of the outer pattern.

Keywords are case-insensitive; structural dots between statements are
optional.  Annotation labels are `?var` or a literal of the query's
domain (temporal shorthands `[a,b]`, `[a]`, and bare points accepted).
Filter expressions support BOUND/isIRI/isBLANK/isLITERAL, `=`, `!=`,
the domain order `<=`, `!`, `&&`, `||`, and registered built-ins.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..domains import Domain, get_domain
from ..errors import AnnotationSyntaxError, ParseError
from ..anql import algebra as alg
from ..anql.builtins import is_known
from .data import KEYWORDS, _BARE_RE, _PNAME_RE

_STRUCTURAL = {
    "select",
    "where",
    "optional",
    "union",
    "filter",
    "assign",
    "as",
    "groupby",
    "orderby",
    "limit",
}
_AGGREGATES = {"sum", "avg", "max", "min", "count", "join", "meet"}

_VAR_RE = re.compile(r"\?([A-Za-z_][A-Za-z0-9_]*)")
_WORD_RE = re.compile(r"[A-Za-z][A-Za-z0-9_.\-]*")
_INT_RE = re.compile(r"\d+")
_NUMBER_RE = re.compile(r"[+-]?\d+(\.\d+)?(/\d+)?")


class _Scanner:
    def __init__(self, text: str, domain: Domain):
        self.text = text
        self.pos = 0
        self.domain = domain
        self.prefixes: dict[str, str] = {}

    # -- low level ---------------------------------------------------------

    def error(self, message: str) -> ParseError:
        line = self.text.count("\n", 0, self.pos) + 1
        column = self.pos - (self.text.rfind("\n", 0, self.pos) + 1) + 1
        return ParseError(message, line, column)

    def skip_ws(self) -> None:
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "#":
                nl = self.text.find("\n", self.pos)
                self.pos = len(self.text) if nl < 0 else nl
            elif ch.isspace():
                self.pos += 1
            else:
                return

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def expect(self, char: str) -> None:
        if not self.take(char):
            raise self.error(f"expected {char!r}")

    def keyword(self) -> str | None:
        """Peek the next bare word, lowercased, without consuming."""
        self.skip_ws()
        m = _WORD_RE.match(self.text, self.pos)
        if m and not self.text.startswith(":", m.end()):
            return m.group(0).lower()
        return None

    def take_keyword(self, word: str) -> bool:
        if self.keyword() == word:
            m = _WORD_RE.match(self.text, self.pos)
            self.pos = m.end()
            return True
        return False

    def var(self) -> alg.Var:
        self.skip_ws()
        m = _VAR_RE.match(self.text, self.pos)
        if not m:
            raise self.error("expected ?variable")
        self.pos = m.end()
        return alg.Var(m.group(1))

    # -- terms and annotation labels ----------------------------------------

    def term(self) -> alg.TermSlot:
        from ..model import iri, literal

        self.skip_ws()
        ch = self.peek()
        if ch == "?":
            return self.var()
        if ch == "<":
            end = self.text.find(">", self.pos + 1)
            if end < 0:
                raise self.error("unterminated <iri>")
            value = self.text[self.pos + 1 : end]
            self.pos = end + 1
            return iri(value)
        if ch == '"':
            out = []
            i = self.pos + 1
            while i < len(self.text):
                c = self.text[i]
                if c == "\\" and i + 1 < len(self.text):
                    out.append({"n": "\n", "t": "\t"}.get(self.text[i + 1], self.text[i + 1]))
                    i += 2
                    continue
                if c == '"':
                    self.pos = i + 1
                    return literal("".join(out))
                out.append(c)
                i += 1
            raise self.error("unterminated string literal")
        m = _PNAME_RE.match(self.text, self.pos)
        if m and ":" in self.text[self.pos : m.end()]:
            prefix = m.group(1) or ""
            if prefix not in self.prefixes:
                raise self.error(f"undeclared prefix {prefix!r}")
            self.pos = m.end()
            return iri(self.prefixes[prefix] + m.group(2))
        m = _BARE_RE.match(self.text, self.pos)
        if m:
            word = m.group(0)
            self.pos = m.end()
            return KEYWORDS.get(word, iri(word))
        raise self.error("expected a term")

    def balanced(self, open_char: str, close_char: str) -> str:
        self.skip_ws()
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == open_char:
                depth += 1
            elif ch == close_char:
                depth -= 1
                if depth == 0:
                    self.pos += 1
                    return self.text[start : self.pos]
            self.pos += 1
        raise self.error(f"unbalanced {open_char}")

    def annotation_label(self) -> alg.AnnotationLabel:
        self.skip_ws()
        ch = self.peek()
        if ch == "?":
            return self.var()
        if ch == "{":
            text = self.balanced("{", "}")
        elif ch == "[":
            text = self.balanced("[", "]")
        elif ch == "(":
            text = self.balanced("(", ")")
        else:
            m = _NUMBER_RE.match(self.text, self.pos) or _WORD_RE.match(
                self.text, self.pos
            )
            if not m:
                raise self.error("expected an annotation label")
            text = m.group(0)
            self.pos = m.end()
        try:
            return self.domain.parse(text)
        except AnnotationSyntaxError as exc:
            raise self.error(str(exc)) from None

    # -- operands in filters / assignments ------------------------------------

    def operand(self) -> alg.Operand:
        self.skip_ws()
        ch = self.peek()
        if ch == "?":
            return self.var()
        if ch in "{[":
            close = "}" if ch == "{" else "]"
            text = self.balanced(ch, close)
            return self._annotation(text)
        if ch == "(":
            return self._annotation(self.balanced("(", ")"))
        m = _NUMBER_RE.match(self.text, self.pos)
        if m and m.group(0) not in ("-", "+"):
            token = m.group(0)
            self.pos = m.end()
            if "/" in token:
                num, den = token.split("/")
                return Fraction(int(num), int(den))
            return Fraction(token)
        word = self.keyword()
        if word in ("true", "false"):
            # A boolean annotation literal where the domain has one,
            # otherwise a plain IRI term.
            try:
                value = self.domain.parse(word)
            except AnnotationSyntaxError:
                return self.term()
            m = _WORD_RE.match(self.text, self.pos)
            self.pos = m.end()
            return value
        return self.term()

    def _annotation(self, text: str):
        try:
            return self.domain.parse(text)
        except AnnotationSyntaxError as exc:
            raise self.error(str(exc)) from None


def parse_query(text: str, domain: Domain | str) -> alg.QueryDocument:
    if isinstance(domain, str):
        domain = get_domain(domain)
    sc = _Scanner(text, domain)
    while sc.keyword() is None and sc.peek() == "@":
        _parse_prologue_line(sc)
    if not sc.take_keyword("select"):
        raise sc.error("query must start with SELECT")
    select = []
    while sc.peek() == "?":
        select.append(sc.var())
    if not select:
        raise sc.error("SELECT needs at least one variable")
    sc.take_keyword("where")
    pattern = _parse_group(sc)
    order_by = None
    limit = None
    while not sc.at_end():
        if sc.take_keyword("orderby"):
            order_by = sc.var()
        elif sc.take_keyword("limit"):
            limit = _parse_int(sc)
        else:
            raise sc.error("expected ORDERBY, LIMIT, or end of query")
    return alg.QueryDocument(
        select=tuple(select), pattern=pattern, order_by=order_by, limit=limit
    )


def _parse_prologue_line(sc: _Scanner) -> None:
    if sc.text.startswith("@prefix", sc.pos):
        sc.pos += len("@prefix")
        sc.skip_ws()
        m = re.match(r"([A-Za-z][A-Za-z0-9_.\-]*)?:", sc.text[sc.pos :])
        if not m:
            raise sc.error("@prefix needs 'name:'")
        prefix = m.group(1) or ""
        sc.pos += m.end()
        sc.expect("<")
        end = sc.text.find(">", sc.pos)
        if end < 0:
            raise sc.error("unterminated prefix IRI")
        sc.prefixes[prefix] = sc.text[sc.pos : end]
        sc.pos = end + 1
        sc.expect(".")
        return
    raise sc.error("unknown prologue directive")


def _parse_int(sc: _Scanner) -> int:
    sc.skip_ws()
    m = _INT_RE.match(sc.text, sc.pos)
    if not m:
        raise sc.error("expected an integer")
    sc.pos = m.end()
    return int(m.group(0))


def _parse_group(sc: _Scanner) -> alg.Pattern:
    sc.expect("{")
    acc: alg.Pattern | None = None
    bap: list[alg.TriplePattern] = []

    def flush() -> None:
        nonlocal acc, bap
        if bap:
            block = alg.Bap(tuple(bap))
            acc = block if acc is None else alg.Join(acc, block)
            bap = []

    while True:
        if sc.take("}"):
            break
        if sc.at_end():
            raise sc.error("unterminated group")
        word = sc.keyword()
        ch = sc.peek()
        if ch == "{":
            flush()
            sub = _parse_group(sc)
            while sc.take_keyword("union"):
                sub = alg.Union(sub, _parse_group(sc))
            acc = sub if acc is None else alg.Join(acc, sub)
        elif word == "optional":
            flush()
            sc.take_keyword("optional")
            inner = _parse_group(sc)
            guard = None
            if isinstance(inner, alg.Filter):
                inner, guard = inner.pattern, inner.expr
            if acc is None:
                acc = alg.Bap(())
            acc = alg.Optional(acc, inner, guard)
        elif word == "filter":
            flush()
            sc.take_keyword("filter")
            sc.expect("(")
            expr = _parse_filter_expr(sc)
            sc.expect(")")
            if acc is None:
                acc = alg.Bap(())
            acc = alg.Filter(acc, expr)
        elif word == "assign":
            flush()
            sc.take_keyword("assign")
            fn, args = _parse_call_or_operand(sc)
            if not sc.take_keyword("as"):
                raise sc.error("ASSIGN needs 'AS ?var'")
            target = sc.var()
            if acc is None:
                acc = alg.Bap(())
            acc = alg.Assign(acc, fn, args, target)
        elif word == "groupby":
            flush()
            sc.take_keyword("groupby")
            sc.expect("(")
            keys = []
            while sc.peek() == "?":
                keys.append(sc.var())
                sc.take(",")
            sc.expect(")")
            aggregates = []
            while sc.keyword() in _AGGREGATES:
                aggregates.append(_parse_aggregate(sc))
            if acc is None:
                acc = alg.Bap(())
            acc = alg.GroupBy(acc, tuple(keys), tuple(aggregates))
        elif word == "orderby":
            flush()
            sc.take_keyword("orderby")
            if acc is None:
                acc = alg.Bap(())
            acc = alg.OrderBy(acc, sc.var())
        elif word == "limit":
            flush()
            sc.take_keyword("limit")
            if acc is None:
                acc = alg.Bap(())
            acc = alg.Limit(acc, _parse_int(sc))
        elif word == "select":
            flush()
            sc.take_keyword("select")
            variables = []
            while sc.peek() == "?":
                variables.append(sc.var())
            sc.take_keyword("where")
            inner = _parse_group(sc)
            sub = alg.SubSelect(tuple(variables), inner)
            acc = sub if acc is None else alg.Join(acc, sub)
        else:
            bap.append(_parse_triple_pattern(sc))
            sc.take(".")
    flush()
    if acc is None:
        raise sc.error("empty group")
    return acc


def _parse_triple_pattern(sc: _Scanner) -> alg.TriplePattern:
    if sc.peek() == "(":
        sc.expect("(")
        s = sc.term()
        p = sc.term()
        o = sc.term()
        sc.expect(")")
        sc.expect(":")
        label = sc.annotation_label()
        return alg.TriplePattern(s, p, o, label)
    s = sc.term()
    p = sc.term()
    o = sc.term()
    return alg.TriplePattern(s, p, o, None)


def _parse_aggregate(sc: _Scanner) -> alg.Aggregate:
    op = sc.keyword().upper()
    m = _WORD_RE.match(sc.text, sc.pos)
    sc.pos = m.end()
    sc.expect("(")
    fn, args = _parse_call_or_operand(sc)
    sc.expect(")")
    if not sc.take_keyword("as"):
        raise sc.error("aggregates need 'AS ?var'")
    return alg.Aggregate(op=op, fn=fn, args=args, target=sc.var())


def _parse_call_or_operand(sc: _Scanner) -> tuple[str, tuple[alg.Operand, ...]]:
    """Either `name(arg, ...)` for a registered built-in, or a single
    operand (identity function)."""
    sc.skip_ws()
    m = _WORD_RE.match(sc.text, sc.pos)
    if m and sc.text.startswith("(", m.end()):
        name = m.group(0)
        if not is_known(name):
            raise sc.error(f"unknown built-in {name!r}")
        sc.pos = m.end()
        sc.expect("(")
        args = []
        if sc.peek() != ")":
            args.append(sc.operand())
            while sc.take(","):
                args.append(sc.operand())
        sc.expect(")")
        return name, tuple(args)
    return "", (sc.operand(),)


def _parse_filter_expr(sc: _Scanner) -> alg.FilterExpr:
    left = _parse_filter_and(sc)
    while True:
        sc.skip_ws()
        if sc.text.startswith("||", sc.pos):
            sc.pos += 2
            left = alg.Or(left, _parse_filter_and(sc))
        else:
            return left


def _parse_filter_and(sc: _Scanner) -> alg.FilterExpr:
    left = _parse_filter_unary(sc)
    while True:
        sc.skip_ws()
        if sc.text.startswith("&&", sc.pos):
            sc.pos += 2
            left = alg.And(left, _parse_filter_unary(sc))
        else:
            return left


def _parse_filter_unary(sc: _Scanner) -> alg.FilterExpr:
    sc.skip_ws()
    if sc.take("!"):
        if sc.peek() == "=":
            raise sc.error("unexpected '!='")
        return alg.Not(_parse_filter_unary(sc))
    return _parse_filter_primary(sc)


def _parse_filter_primary(sc: _Scanner) -> alg.FilterExpr:
    sc.skip_ws()
    word = sc.keyword()
    if word == "bound":
        sc.take_keyword("bound")
        sc.expect("(")
        var = sc.var()
        sc.expect(")")
        return alg.Bound(var)
    for name, node in (("isiri", alg.IsIri), ("isblank", alg.IsBlank), ("isliteral", alg.IsLiteral)):
        if word == name:
            sc.take_keyword(name)
            sc.expect("(")
            operand = sc.operand()
            sc.expect(")")
            return _maybe_comparison(sc, node(operand), operand=None)
    m = _WORD_RE.match(sc.text, sc.pos)
    if m and sc.text.startswith("(", m.end()):
        name = m.group(0)
        if is_known(name):
            sc.pos = m.end()
            sc.expect("(")
            args = []
            if sc.peek() != ")":
                args.append(sc.operand())
                while sc.take(","):
                    args.append(sc.operand())
            sc.expect(")")
            return alg.BuiltinCall(name, tuple(args))
        if name.lower() not in _STRUCTURAL and not _NUMBER_RE.fullmatch(name):
            raise sc.error(f"unknown built-in {name!r}")
    if sc.peek() == "(":
        # Try a parenthesised boolean expression; fall back to an
        # annotation literal operand (e.g. a provenance formula).
        saved = sc.pos
        try:
            sc.expect("(")
            inner = _parse_filter_expr(sc)
            sc.expect(")")
            return inner
        except ParseError:
            sc.pos = saved
    operand = sc.operand()
    return _maybe_comparison(sc, None, operand)


def _maybe_comparison(
    sc: _Scanner, ready: alg.FilterExpr | None, operand: alg.Operand | None
) -> alg.FilterExpr:
    if ready is not None:
        return ready
    sc.skip_ws()
    if sc.text.startswith("<=", sc.pos):
        sc.pos += 2
        return alg.AnnLeq(operand, sc.operand())
    if sc.text.startswith("!=", sc.pos):
        sc.pos += 2
        return alg.Not(alg.Eq(operand, sc.operand()))
    if sc.text.startswith("=", sc.pos):
        sc.pos += 1
        return alg.Eq(operand, sc.operand())
    raise sc.error("expected a comparison operator")
