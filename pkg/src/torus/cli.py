"""Command-line front end: ``torus <subcommand> ...``."""

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction
from importlib import resources

from . import bracketing, growth, powers, stack
from .graphmap import Automorphism, GraphMap, rose_of
from .group import format_group_word, normal_form, parse_group_word, random_null_word

BUNDLED = ("identity", "inversion", "permutation", "fib", "psi", "rank3", "swap_edge")


class DomainError(Exception):
    pass


def _read_spec(path: str) -> dict:
    if not os.path.exists(path):
        name = os.path.basename(path)
        name = name[:-5] if name.endswith(".json") else name
        if name in BUNDLED:
            return json.loads(resources.files("torus.data").joinpath(f"{name}.json").read_text())
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: invalid JSON ({exc})") from None


def load_phi(path: str) -> Automorphism:
    """Load and verify an automorphism spec; bundled names such as ``fib`` also work."""
    spec = _read_spec(path)
    if "images" not in spec:
        raise DomainError(f"{path}: not an automorphism spec")
    try:
        return Automorphism.from_dict(spec)
    except (KeyError, TypeError) as exc:
        raise DomainError(f"{path}: malformed spec ({exc})") from None
    except ValueError as exc:
        raise DomainError(f"{path}: {exc}") from None


def load_map(path: str) -> GraphMap:
    spec = _read_spec(path)
    if "edge_image" in spec:
        try:
            return GraphMap.from_dict(spec)
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"{path}: {exc}") from None
    return rose_of(load_phi(path))


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _words(args, alphabet):
    if args.word is not None:
        texts = [args.word]
    else:
        try:
            with open(args.words) as fh:
                texts = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
        except OSError as exc:
            raise DomainError(f"cannot read {args.words}: {exc.strerror}") from None
    try:
        return [parse_group_word(alphabet, s) for s in texts]
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def cmd_check(args):
    phi = load_phi(args.phi)
    out = []
    for w in _words(args, phi.alphabet):
        nf, peak = normal_form(w, phi, with_peak=True)
        out.append(nf.format(phi.alphabet) + "\n")
        print(f"peak tail length: {peak}", file=sys.stderr)
    return "".join(out)


def cmd_bracket(args):
    phi = load_phi(args.phi)
    results = []
    for w in _words(args, phi.alphabet):
        try:
            b = bracketing.canonical_bracketing(w, phi)
            rec = b.to_dict(phi.alphabet)
            if args.oracle:
                ob, ratio = bracketing.optimal_bracketing_oracle(w, phi)
                rec["oracle"] = ob.to_dict(phi.alphabet)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        results.append(rec)
    return _json(results[0] if args.word is not None else results)


def _parse_segments(f: GraphMap, text: str):
    segs = []
    for part in text.split("|"):
        try:
            segs.append(f.alphabet.parse(part))
        except ValueError as exc:
            raise DomainError(str(exc)) from None
    return segs


def cmd_stack(args):
    f = load_map(args.phi)
    try:
        d = stack.build_stack(f, _parse_segments(f, args.path), args.steps)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    return d.to_dot() if args.emit == "dot" else _json(d.to_dict())


def cmd_growth(args):
    phi = load_phi(args.phi)
    if args.oracle:
        try:
            k = growth.k_exhaustive(phi, args.max_len, args.horizon, args.mode)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        rec = {"mode": args.mode, "max_len": args.max_len, "horizon": args.horizon,
               "k": bracketing.format_ratio(k)}
        return _json(rec) if args.emit == "json" else f"{rec['k']}\n"
    if args.brinkmann is not None:
        if args.seed is None:
            raise UsageError("--brinkmann requires --seed")
        rep = growth.check_brinkmann(phi, Fraction(args.brinkmann), seed=args.seed, count=args.count,
                                     max_len=args.max_len, max_N=args.horizon, mode=args.mode)
        return _json({
            "K": bracketing.format_ratio(rep.K), "mode": rep.mode, "checked": rep.checked,
            "violations": [{"word": phi.alphabet.format(w), "i": i, "N": n} for w, i, n in rep.violations],
        })
    if args.word is None:
        raise UsageError("growth needs --word, --oracle or --brinkmann")
    try:
        w = phi.alphabet.parse(args.word)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    tab = growth.growth_table(phi, w, args.horizon, args.mode)
    if args.emit == "json":
        return _json({"word": phi.alphabet.format(tab.word), "N": tab.N, "mode": tab.mode,
                      "based_lengths": list(tab.based_lengths), "cyclic_lengths": list(tab.cyclic_lengths),
                      "k_emp": bracketing.format_ratio(tab.k_emp)})
    return tab.to_tsv()


def cmd_power(args):
    phi = load_phi(args.phi)
    try:
        w = parse_group_word(phi.alphabet, args.word)
        r = powers.rewrite_power(w, phi, args.p)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    return _json(r.format(phi.alphabet))


def cmd_bcc(args):
    f = load_map(args.phi)
    values, stable = stack.bcc_profile(f, args.depth)
    return _json({"depth": args.depth, "estimates": values, "stable_at": stable, "estimate": values[-1]})


def cmd_corpus(args):
    phi = load_phi(args.phi)
    lines = []
    for k in range(args.count):
        w = random_null_word(phi, f"{args.seed}:{k}", args.length, args.t_density)
        lines.append(format_group_word(phi.alphabet, w) + "\n")
    return "".join(lines)


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="torus", description="Computations in free-by-cyclic groups.")
    p.add_argument("--out", help="write output to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def with_phi(sp):
        sp.add_argument("--phi", required=True, help="automorphism spec (path or bundled name)")
        return sp

    def with_words(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--word")
        g.add_argument("--words", help="file with one word per line")
        return sp

    sp = with_words(with_phi(sub.add_parser("check", help="normal form of a word")))
    sp.set_defaults(func=cmd_check)

    sp = with_words(with_phi(sub.add_parser("bracket", help="t-complete bracketing of a null word")))
    sp.add_argument("--oracle", action="store_true", help="also run the exhaustive optimum")
    sp.set_defaults(func=cmd_bracket)

    sp = with_phi(sub.add_parser("stack", help="simulate a stack of corridors"))
    sp.add_argument("--path", required=True, help='coloured path, segments separated by "|"')
    sp.add_argument("--steps", type=int, default=4)
    sp.add_argument("--emit", choices=("json", "dot"), default="json")
    sp.set_defaults(func=cmd_stack)

    sp = with_phi(sub.add_parser("growth", help="orbit growth and the Brinkmann-type inequality"))
    sp.add_argument("--word")
    sp.add_argument("--horizon", type=int, default=10)
    sp.add_argument("--mode", choices=("based", "cyclic"), default="based")
    sp.add_argument("--emit", choices=("tsv", "json"), default="tsv")
    sp.add_argument("--oracle", action="store_true", help="exhaustive constant over short words")
    sp.add_argument("--max-len", type=int, default=6)
    sp.add_argument("--brinkmann", metavar="K", help="check the inequality at constant K on a random corpus")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--count", type=int, default=1000)
    sp.set_defaults(func=cmd_growth)

    sp = with_phi(sub.add_parser("power", help="rewrite a word over tau = t^p"))
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=cmd_power)

    sp = with_phi(sub.add_parser("bcc", help="empirical bounded-cancellation constant"))
    sp.add_argument("--depth", type=int, default=4)
    sp.set_defaults(func=cmd_bcc)

    sp = with_phi(sub.add_parser("corpus", help="seeded random null words"))
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--length", type=int, default=40)
    sp.add_argument("--t-density", type=float, default=0.3)
    sp.set_defaults(func=cmd_corpus)
    return p


def _write_atomic(path: str, text: str):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".torus-")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"torus: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"torus: {exc}", file=sys.stderr)
        return 1
    if args.out:
        _write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
