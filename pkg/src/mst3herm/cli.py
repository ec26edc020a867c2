"""Command-line front end.

    mst3herm params   [field/type options]
    mst3herm keygen   [field/type options] [--seed N] [--paper-key] --out-pk F --out-sk F
    mst3herm encrypt  --pk F (--in F | --message TEXT) --out F [--q1 N --q2 N] [--seed N]
    mst3herm decrypt  --sk F --pk F --in F --out F
    mst3herm selftest [--fixtures F]
    mst3herm attack   --id NAME [--preset NAME] [--seed N] [--bound N] [--format text|kv]

Exit codes: 0 success, 1 usage error, 2 data or parse error, 3 decryption
failure, 4 fixture check failure.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from pathlib import Path

from . import attacks, codec
from .errors import FactorizationFailed, FieldTooLargeForScan, Mst3Error, SpaceTooLarge
from .field import make_field, qtrace_kernel
from .hgroup import random_element
from .mst3 import SchemeParams, decrypt, encrypt, keygen
from .presets import PRESETS, preset_params

log = logging.getLogger("mst3herm")

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_CRYPTO, EXIT_FIXTURE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _add_scheme_options(p: argparse.ArgumentParser):
    p.add_argument("--preset", choices=sorted(PRESETS), help="named parameter set")
    p.add_argument("--p", type=int, help="odd prime characteristic")
    p.add_argument("--n", type=int, help="q = p^n; the field is F_{p^2n}")
    p.add_argument("--modulus", type=_int_list, help="2n+1 coefficients, constant term first")
    p.add_argument("--type1", type=_int_list, help="beta-stage radices, product q^2")
    p.add_argument("--type2", type=_int_list, help="gamma-stage radices, product q")


def _scheme(args) -> SchemeParams:
    if args.preset:
        sp = preset_params(args.preset)
        if args.type1 or args.type2:
            sp = SchemeParams.build(sp.field, args.type1 or sp.type1.radices, args.type2 or sp.type2.radices)
        return sp
    if args.p is None or args.n is None or args.modulus is None:
        raise UsageError("give --preset or all of --p, --n, --modulus")
    F = make_field(args.p, args.n, args.modulus)
    t1 = args.type1 or (F.q, F.q)
    t2 = args.type2 or (F.q,)
    return SchemeParams.build(F, t1, t2)


def _rng(seed) -> random.Random:
    return random.Random(seed) if seed is not None else random.Random()


def _distinct(*paths):
    real = [Path(p).resolve() for p in paths if p is not None]
    if len(set(real)) != len(real):
        raise UsageError("input and output paths must differ")


def cmd_params(args) -> int:
    sp = _scheme(args)
    F = sp.field
    print(F.serialize())
    print(f"q={F.q} field_size={F.size} generator={F.generator}")
    print(f"dlog_table={'yes' if F.has_tables else 'no'}")
    try:
        print(f"qtrace_kernel_size={len(qtrace_kernel(F))}")
    except FieldTooLargeForScan:
        print("qtrace_kernel_size=-")
    print(f"TYPE1 {sp.type1}")
    print(f"TYPE2 {sp.type2}")
    print(f"group_order={F.q ** 3 * (F.q ** 2 - 1)}")
    return EXIT_OK


def cmd_keygen(args) -> int:
    _distinct(args.out_pk, args.out_sk)
    if args.paper_key:
        pk, sk = codec.load_paper_fixtures(args.fixtures).keys()
    else:
        pk, sk = keygen(_scheme(args), _rng(args.seed))
    Path(args.out_pk).write_text(codec.serialize_public_key(pk), encoding="utf-8")
    Path(args.out_sk).write_text(codec.serialize_secret_key(sk), encoding="utf-8")
    log.info("wrote %s and %s", args.out_pk, args.out_sk)
    return EXIT_OK


def cmd_encrypt(args) -> int:
    _distinct(args.pk, args.input, args.out)
    pk = codec.parse_public_key(Path(args.pk).read_text(encoding="utf-8"))
    if (args.input is None) == (args.message is None):
        raise UsageError("give exactly one of --in and --message")
    text = args.message if args.message is not None else Path(args.input).read_text(encoding="utf-8")
    x = codec.parse_message(text, pk.field)
    if (args.q1 is None) != (args.q2 is None):
        raise UsageError("--q1 and --q2 go together")
    Q = (args.q1, args.q2) if args.q1 is not None else None
    ct = encrypt(pk, x, Q, rng=random.Random(args.seed) if args.seed is not None else None)
    Path(args.out).write_text(codec.serialize_ciphertext(ct), encoding="utf-8")
    return EXIT_OK


def cmd_decrypt(args) -> int:
    _distinct(args.sk, args.pk, args.input, args.out)
    sk = codec.parse_secret_key(Path(args.sk).read_text(encoding="utf-8"))
    pk = codec.parse_public_key(Path(args.pk).read_text(encoding="utf-8"))
    ct = codec.parse_ciphertext(Path(args.input).read_text(encoding="utf-8"))
    x = decrypt(sk, pk, ct)
    Path(args.out).write_text(codec.serialize_message(x), encoding="utf-8")
    return EXIT_OK


def cmd_selftest(args) -> int:
    fs = codec.load_paper_fixtures(args.fixtures)
    checks = codec.run_fixture_checks(fs)
    print(codec.render_report(checks))
    return EXIT_FIXTURE if any(c.status == codec.FAILED for c in checks) else EXIT_OK


def cmd_attack(args) -> int:
    sp = _scheme(args) if (args.preset or args.p) else preset_params("toy-3")
    rng = _rng(args.seed)
    pk, sk = keygen(sp, rng)
    x = random_element(sp.field, rng, "any")
    Q = (rng.randrange(sp.type1.size), rng.randrange(sp.type2.size))
    ct = encrypt(pk, x, Q)
    name = args.id
    if name == "exhaust_q":
        report = attacks.attack_exhaust_q(pk, ct, Q, x, bound=args.bound)
    elif name == "match_y3":
        report = attacks.attack_match_y3(pk, ct, Q[0], bound=args.bound)
    elif name == "match_y4":
        report = attacks.attack_match_y4(pk, ct, Q[1], bound=args.bound)
    elif name == "strip_y1":
        report = attacks.attack_strip_y1(pk, ct, x, bound=args.bound)
    else:
        report = attacks.attack_exhaust_tau(pk, sk, bound=args.bound)
    print(report.render_kv() if args.format == "kv" else report.render_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mst3herm", description="MST3 encryption over the Hermitian three-parameter group")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("params", help="validate parameters and print a field summary")
    _add_scheme_options(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("keygen", help="write a public and a secret key file")
    _add_scheme_options(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--paper-key", action="store_true", help="export the worked-example key instead")
    p.add_argument("--fixtures", help="fixture file for --paper-key")
    p.add_argument("--out-pk", required=True)
    p.add_argument("--out-sk", required=True)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt a message triple")
    p.add_argument("--pk", required=True)
    p.add_argument("--in", dest="input")
    p.add_argument("--message", help="three comma-separated slots, e.g. a^1,a^2,a^3")
    p.add_argument("--out", required=True)
    p.add_argument("--q1", type=int)
    p.add_argument("--q2", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    p.add_argument("--sk", required=True)
    p.add_argument("--pk", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("selftest", help="check the worked example and print the deviation report")
    p.add_argument("--fixtures", help=f"fixture file (default: ${codec.FIXTURE_ENV} or the bundled one)")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("attack", help="run a brute-force bench on a fresh toy key")
    p.add_argument("--id", required=True, choices=sorted(attacks.ATTACKS))
    _add_scheme_options(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--bound", type=int, default=attacks.DEFAULT_BOUND)
    p.add_argument("--format", choices=("text", "kv"), default="text")
    p.set_defaults(func=cmd_attack)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FactorizationFailed as exc:
        print(f"decryption failed: {exc}", file=sys.stderr)
        return EXIT_CRYPTO
    except SpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Mst3Error, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
