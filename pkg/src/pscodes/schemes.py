"""Scheme registry: parameter bundles, canonical parameter files, and the
uniform encode/decode surface used by the sweep harness and the CLI.

Message domains per scheme id:

* ``c1``    -- the codeword itself (the scheme has no efficient encoder; the
  CLI addresses codewords by index into the exhaustive codebook);
* ``c2``    -- tuple of field symbols;
* ``c3``/``c4`` -- bit string for the dominant sub-encoder;
* ``multi`` -- tuple of h bit strings (raw information strings when t = 0,
  messages of the per-string error-correcting code when t > 0).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .bch import BchCode, bch_build, bch_encode
from .compositions import CompositionMultiset, normalize, prefix_weights
from .dominance import ENUMERATIVE, INTERLEAVE
from .errors import DecodeFailure
from .multi_recon import (
    PhiSpec,
    _strings_from_view,
    multi_decode_errors,
    multi_decode_free,
    phi_encode,
    phi_extract,
)
from .oracle import hamming
from .results import Verdict
from .single_recon import (
    C1Params,
    C2Params,
    C3Params,
    C4Params,
    c1_codebook,
    c1_decode,
    c1_params,
    c2_decode,
    c2_encode,
    c2_params,
    c3_decode,
    c3_encode,
    c3_params,
    c4_decode,
    c4_encode,
    c4_params,
    mass_diff_string,
)

SCHEME_IDS = ("c1", "c2", "c3", "c4", "multi")


@dataclass(frozen=True)
class MultiParams:
    spec: PhiSpec
    t: int
    good: BchCode | None = None

    def __post_init__(self) -> None:
        if self.t < 0:
            raise ValueError("budget must be >= 0")
        if self.t > 0:
            if self.good is None:
                raise ValueError("error correction needs a per-string code")
            if self.good.n != self.spec.k:
                raise ValueError(
                    f"per-string code length {self.good.n} != k = {self.spec.k}"
                )
            if self.good.radius < 4 * self.t:
                raise ValueError(
                    f"per-string code corrects {self.good.radius} < 4t = {4 * self.t}"
                )

    @property
    def n(self) -> int:
        return self.spec.n


def multi_params(h: int, k: int, t: int, good_t: int = 0) -> MultiParams:
    good = None
    if t > 0:
        m = (k + 1).bit_length() - 1
        if k + 1 != 1 << m:
            raise ValueError("the BCH realization needs k = 2^m - 1")
        good = bch_build(m, good_t)
    return MultiParams(PhiSpec(h, k), t, good)


def _random_bits(rng: random.Random, n: int) -> str:
    return format(rng.getrandbits(n), f"0{n}b") if n else ""


class _C1Adapter:
    def describe(self, params: C1Params) -> str:
        return (f"p={params.grs.field.p} n={params.n} t={params.t} "
                f"r={params.grs.r}")

    def budget(self, params: C1Params) -> int:
        return params.t

    def messages(self, params: C1Params):
        return iter(c1_codebook(params))

    def random_message(self, params: C1Params, rng: random.Random) -> str:
        book = c1_codebook(params)
        return book[rng.randrange(len(book))]

    def encode(self, params: C1Params, msg: str) -> tuple[str, ...]:
        return (msg,)

    def decode(self, params: C1Params, y: CompositionMultiset):
        res = c1_decode(y, params)
        return res.verdict, (res.codeword,), res.codeword

    def bit_errors(self, params: C1Params, truth, y) -> int:
        p = params.grs.field.p
        view = normalize(y, 1)
        want = [v % p for v in prefix_weights(truth[0])]
        got = [b % p for b in view.lower()]
        return hamming(want, got)


class _C2Adapter:
    def describe(self, params: C2Params) -> str:
        return f"p={params.p} n1={params.n1} t={params.t} n={params.n}"

    def budget(self, params: C2Params) -> int:
        return params.t

    def messages(self, params: C2Params):
        return itertools.product(range(params.p), repeat=params.grs.k)

    def random_message(self, params: C2Params, rng: random.Random):
        return tuple(rng.randrange(params.p) for _ in range(params.grs.k))

    def encode(self, params: C2Params, msg) -> tuple[str, ...]:
        return (c2_encode(msg, params),)

    def decode(self, params: C2Params, y: CompositionMultiset):
        res = c2_decode(y, params)
        return res.verdict, (res.codeword,), res.message

    def bit_errors(self, params: C2Params, truth, y) -> int:
        p = params.p
        view = normalize(y, 1)
        pw = prefix_weights(truth[0])
        want = [pw[j * params.block - 1] % p for j in range(1, params.n1 + 1)]
        got = [view.masses_at(j * params.block)[0] % p for j in range(1, params.n1 + 1)]
        return hamming(want, got)


class _C3Adapter:
    def describe(self, params: C3Params) -> str:
        return (f"n1={params.n1} p={params.p} n2={params.n2} t={params.t} "
                f"dominant={params.dominant.realization} n={params.n}")

    def budget(self, params: C3Params) -> int:
        return params.t

    def messages(self, params: C3Params):
        k = params.dominant.message_length
        return (format(v, f"0{k}b") for v in range(1 << k))

    def random_message(self, params: C3Params, rng: random.Random) -> str:
        return _random_bits(rng, params.dominant.message_length)

    def encode(self, params: C3Params, msg: str) -> tuple[str, ...]:
        return (c3_encode(msg, params),)

    def decode(self, params: C3Params, y: CompositionMultiset):
        res = c3_decode(y, params)
        return res.verdict, (res.codeword,), res.message

    def bit_errors(self, params: C3Params, truth, y) -> int:
        c = truth[0]
        view = normalize(y, 1)
        sw = prefix_weights(c[::-1])
        want_parity = [sw[j - 1] % 2 for j in range(1, params.n2 + 1)]
        got_parity = [sum(view.masses_at(j)) % 2 for j in range(1, params.n2 + 1)]
        pw = prefix_weights(c)
        want_mass = [pw[params.n2 + j - 1] % params.p for j in range(1, params.n1 + 1)]
        got_mass = [view.masses_at(params.n2 + j)[0] % params.p
                    for j in range(1, params.n1 + 1)]
        return max(hamming(want_parity, got_parity), hamming(want_mass, got_mass))


class _C4Adapter:
    def describe(self, params: C4Params) -> str:
        return (f"n1={params.n1} n2={params.n2} t={params.t} "
                f"good_t={params.good.t} dominant={params.dominant.realization} "
                f"n={params.n}")

    def budget(self, params: C4Params) -> int:
        return params.t

    def messages(self, params: C4Params):
        k = params.dominant.message_length
        return (format(v, f"0{k}b") for v in range(1 << k))

    def random_message(self, params: C4Params, rng: random.Random) -> str:
        return _random_bits(rng, params.dominant.message_length)

    def encode(self, params: C4Params, msg: str) -> tuple[str, ...]:
        return (c4_encode(msg, params),)

    def decode(self, params: C4Params, y: CompositionMultiset):
        res = c4_decode(y, params)
        return res.verdict, (res.codeword,), res.message

    def bit_errors(self, params: C4Params, truth, y) -> int:
        view = normalize(y, 1)
        got = mass_diff_string(view)[-params.n2:]
        return hamming(truth[0][-params.n2:], got)


class _MultiAdapter:
    def describe(self, params: MultiParams) -> str:
        base = f"h={params.spec.h} k={params.spec.k} t={params.t}"
        if params.good is not None:
            base += f" good_t={params.good.t}"
        return base

    def budget(self, params: MultiParams) -> int:
        return params.t

    def _zs(self, params: MultiParams, msg) -> list[str]:
        if params.t == 0:
            return list(msg)
        return [bch_encode(m, params.good) for m in msg]

    def messages(self, params: MultiParams):
        h = params.spec.h
        k = params.spec.k if params.t == 0 else params.good.dimension
        space = [format(v, f"0{k}b") for v in range(1 << k)]
        return itertools.product(space, repeat=h)

    def random_message(self, params: MultiParams, rng: random.Random):
        k = params.spec.k if params.t == 0 else params.good.dimension
        return tuple(_random_bits(rng, k) for _ in range(params.spec.h))

    def encode(self, params: MultiParams, msg) -> tuple[str, ...]:
        return tuple(phi_encode(self._zs(params, msg), params.spec))

    def decode(self, params: MultiParams, y: CompositionMultiset):
        if params.t == 0:
            zs = multi_decode_free(y, params.spec)
            msg = tuple(zs)
        else:
            zs = multi_decode_errors(y, params.spec, params.good)
            msg = tuple(z[: params.good.dimension] for z in zs)
        return Verdict.RECOVERED, tuple(phi_encode(zs, params.spec)), msg

    def bit_errors(self, params: MultiParams, truth, y) -> int:
        view = normalize(y, params.spec.h)
        noisy = _strings_from_view(view, params.spec, mod2=True)
        worst = 0
        for c, nz in zip(truth, noisy):
            z = phi_extract(c, params.spec)
            worst = max(worst, hamming(z, phi_extract(nz, params.spec)))
        return worst


ADAPTERS = {
    "c1": _C1Adapter(),
    "c2": _C2Adapter(),
    "c3": _C3Adapter(),
    "c4": _C4Adapter(),
    "multi": _MultiAdapter(),
}


# --------------------------------------------------------------------------
# Canonical parameter files: one key=value per line, fixed key order.

_FILE_KEYS = {
    "c1": ("scheme", "p", "n", "t", "t1"),
    "c2": ("scheme", "p", "n1", "t"),
    "c3": ("scheme", "n1", "p", "n2", "t", "dominant"),
    "c4": ("scheme", "n1", "n2", "t", "good_t", "dominant"),
    "multi": ("scheme", "h", "k", "t", "good_t"),
}


def params_to_dict(scheme: str, params) -> dict[str, str]:
    if scheme == "c1":
        d = {"p": params.grs.field.p, "n": params.n, "t": params.t,
             "t1": 2 * params.t - params.grs.r}
    elif scheme == "c2":
        d = {"p": params.p, "n1": params.n1, "t": params.t}
    elif scheme == "c3":
        d = {"n1": params.n1, "p": params.p, "n2": params.n2, "t": params.t,
             "dominant": params.dominant.realization}
    elif scheme == "c4":
        d = {"n1": params.n1, "n2": params.n2, "t": params.t,
             "good_t": params.good.t, "dominant": params.dominant.realization}
    elif scheme == "multi":
        d = {"h": params.spec.h, "k": params.spec.k, "t": params.t,
             "good_t": params.good.t if params.good else 0}
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    out = {"scheme": scheme}
    out.update({k: str(v) for k, v in d.items()})
    return out


def params_to_text(scheme: str, params) -> str:
    d = params_to_dict(scheme, params)
    return "".join(f"{k}={d[k]}\n" for k in _FILE_KEYS[scheme])


def build_params(d: dict[str, str]):
    scheme = d["scheme"]
    if scheme not in SCHEME_IDS:
        raise ValueError(f"unknown scheme {scheme!r}")
    g = lambda key, default=None: int(d[key]) if key in d else default
    if scheme == "c1":
        return c1_params(g("p"), g("n"), g("t"), g("t1", 0))
    if scheme == "c2":
        return c2_params(g("p"), g("n1"), g("t"))
    if scheme == "c3":
        return c3_params(g("n1"), g("p"), g("n2"), g("t"),
                         d.get("dominant", INTERLEAVE))
    if scheme == "c4":
        return c4_params(g("n1"), g("n2"), g("t"), g("good_t"),
                         d.get("dominant", ENUMERATIVE))
    return multi_params(g("h"), g("k"), g("t"), g("good_t", 0))


def parse_params_text(text: str) -> tuple[str, object]:
    d = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        key, _, value = ln.partition("=")
        d[key.strip()] = value.strip()
    if "scheme" not in d:
        raise ValueError("parameter file must carry a 'scheme=' line")
    return d["scheme"], build_params(d)
