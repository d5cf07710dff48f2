"""Text formats: code config, matrix dump, stripe arrays, data and pattern files.

Every element is written as lowercase hex of its bit pattern (bit i is the
coefficient of x^i), e.g. x^4+x+1 -> ``13``.
"""

from __future__ import annotations

from .codec import ErasurePattern, StripeArray
from .construction import CodeParams, Variant
from .galois import field_new
from .gf2poly import from_hex
from .ring import ring_new

CONFIG_KEYS = {"variant", "r", "n", "m", "algebra", "w", "modulus", "p"}


class ConfigError(ValueError):
    pass


def parse_config(text: str) -> CodeParams:
    """Parse ``key=value`` lines; blank lines and ``#`` comments are skipped."""
    kv: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not value:
            raise ConfigError("line %d: expected key=value, got %r" % (lineno, raw))
        if key not in CONFIG_KEYS:
            raise ConfigError("line %d: unknown key %r" % (lineno, key))
        if key in kv:
            raise ConfigError("line %d: duplicate key %r" % (lineno, key))
        kv[key] = value

    missing = {"variant", "r", "n", "m", "algebra"} - kv.keys()
    if missing:
        raise ConfigError("missing keys: %s" % ", ".join(sorted(missing)))
    try:
        variant = Variant(kv["variant"].lower())
    except ValueError:
        raise ConfigError("variant must be sd or pmds, got %r" % kv["variant"]) from None
    try:
        r, n, m = int(kv["r"]), int(kv["n"]), int(kv["m"])
        kind = kv["algebra"].lower()
        if kind == "field":
            if "w" not in kv:
                raise ConfigError("algebra=field needs w")
            if "p" in kv:
                raise ConfigError("p is only valid with algebra=ring")
            modulus = from_hex(kv["modulus"]) if "modulus" in kv else None
            algebra = field_new(int(kv["w"]), modulus)
        elif kind == "ring":
            if "p" not in kv:
                raise ConfigError("algebra=ring needs p")
            if "w" in kv or "modulus" in kv:
                raise ConfigError("w/modulus are only valid with algebra=field")
            algebra = ring_new(int(kv["p"]))
        else:
            raise ConfigError("algebra must be field or ring, got %r" % kv["algebra"])
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return CodeParams(r, n, m, variant, algebra)


def format_config(params: CodeParams) -> str:
    alg = params.algebra
    lines = ["variant=%s" % params.variant.value, "r=%d" % params.r, "n=%d" % params.n, "m=%d" % params.m]
    if hasattr(alg, "p"):
        lines += ["algebra=ring", "p=%d" % alg.p]
    else:
        lines += ["algebra=field", "w=%d" % alg.w, "modulus=%x" % alg.modulus]
    return "\n".join(lines) + "\n"


def parse_tokens(text: str, algebra) -> list[int]:
    out = []
    for tok in text.split():
        x = from_hex(tok)
        if x >= algebra.size:
            raise ValueError("token %r does not fit the algebra %s" % (tok, algebra.name))
        out.append(x)
    return out


def parse_array(text: str, params: CodeParams) -> StripeArray:
    rows = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if len(rows) != params.r:
        raise ValueError("array file has %d rows, expected %d" % (len(rows), params.r))
    cells = []
    for k, line in enumerate(rows):
        vals = parse_tokens(line, params.algebra)
        if len(vals) != params.n:
            raise ValueError("array row %d has %d entries, expected %d" % (k, len(vals), params.n))
        cells.append(vals)
    return StripeArray(params, cells)


def parse_pattern(text: str) -> ErasurePattern:
    body = " ".join(line for line in text.splitlines() if not line.lstrip().startswith("#"))
    return ErasurePattern.parse(body)
