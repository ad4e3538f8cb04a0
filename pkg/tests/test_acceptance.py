"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line.  Run with `pytest tests/test_acceptance.py -v -s`."""

import json
import random
import subprocess
import sys
import time
from itertools import permutations

from greenseq import (
    MutationSequence,
    Quiver,
    SearchConfig,
    all_intervals,
    cross_validate,
    dt_product,
    enumerate_maximal_chains,
    enumerate_mgs,
    hom_nonzero,
    identity_check,
    linear_quiver,
    restrict_mgs,
    rotate,
    shortest_mgs,
    source_sequence,
    verify_sequence,
)
from greenseq.cli import run
from greenseq.presets import preset

from conftest import random_acyclic_quiver, random_quiver
from oracles import hom_nonzero_oracle


def report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {status}: {name}{suffix}")
    assert ok, f"{name}{suffix}"


def run_cli(*args: str) -> tuple[int, dict]:
    """The installed CLI in a subprocess, JSON output parsed."""
    proc = subprocess.run(
        [sys.executable, "-m", "greenseq.cli", *args, "--json"],
        capture_output=True,
        text=True,
    )
    data = json.loads(proc.stdout) if proc.stdout.strip() else {}
    return proc.returncode, data


def test_a2_enumeration():
    start = time.monotonic()
    rep = enumerate_mgs(linear_quiver(2), SearchConfig(max_len=5))
    elapsed = time.monotonic() - start
    code, data = run_cli("search", "--quiver", "a2", "--max-len", "5")
    ok = (
        [str(s) for s in rep.sequences] == ["1,2", "2,1,2"]
        and not rep.truncated
        and elapsed < 1.0
        and code == 0
        and data["sequences"] == ["1,2", "2,1,2"]
        and data["truncated"] is False
    )
    report("A2 enumeration", ok, f"{elapsed:.3f}s in-process")


def test_mutation_regression():
    three_cycle = Quiver.from_arrows(3, [[2, 1, 1], [1, 3, 1], [3, 2, 1]])
    mutated = three_cycle.mutate(1)
    report(
        "mutation regression on the 3-cycle",
        mutated.arrows() == [(1, 2, 1), (3, 1, 1)],
        f"arrows {mutated.arrows()}",
    )


def test_pentagon():
    start = time.monotonic()
    code = run(["identity", "--quiver", "a2", "--seq1", "1,2",
                "--seq2", "2,1,2", "--degree", "8"])
    elapsed = time.monotonic() - start
    report("pentagon identity at degree 8", code == 0 and elapsed < 5.0, f"{elapsed:.3f}s")


def test_dt_independence_linear_a3():
    rep = enumerate_mgs(linear_quiver(3), SearchConfig(max_len=10))
    assert not rep.truncated
    values = [dt_product(linear_quiver(3), s.without_annotations(), 6) for s in rep.sequences]
    ok = all(identity_check(values[0], v) for v in values[1:])
    report("DT independence for linear A3", ok, f"{len(values)} sequences at D=6")


def _endpoint_is_minus_permutation(q, seq) -> bool:
    res = verify_sequence(q, seq, "maximal_green")
    if not res.valid:
        return False
    final = res.final
    for row in final.cmat:
        if sorted(row) != sorted([-1] + [0] * (q.n - 1)):
            return False
    try:
        final.extract_permutation()  # also checks the conjugated principal part
    except Exception:
        return False
    return True


def test_endpoint_shape():
    checked = 0
    ok = True
    for q in (linear_quiver(2), linear_quiver(3)):
        rep = enumerate_mgs(q, SearchConfig(max_len=8))
        for seq in rep.sequences:
            ok = ok and _endpoint_is_minus_permutation(q, seq)
            checked += 1
    rng = random.Random(2718)
    for _ in range(50):
        q = random_acyclic_quiver(rng, rng.randint(1, 5))
        found = [source_sequence(q)]
        short = shortest_mgs(q, q.n + 4)
        if short is not None:
            found.append(short)
        for seq in found:
            ok = ok and _endpoint_is_minus_permutation(q, seq)
            checked += 1
    report("all-red endpoints are minus a permutation", ok, f"{checked} endpoints")


def test_sign_coherence_bulk():
    rng = random.Random(161803)
    sequences = 0
    from greenseq import frame

    while sequences < 10_000:
        n = rng.randint(1, 5)
        q = random_quiver(rng, n, max_entry=2)
        state = frame(q)
        for _ in range(rng.randint(1, 20)):
            state = state.mutate(rng.randint(1, n))  # constructor asserts coherence
        sequences += 1
    report("sign coherence over random mutation sequences", True, "10000 sequences")


def test_source_sequences_are_mgs():
    rng = random.Random(577215)
    quivers = 0
    orders = 0
    ok = True
    while quivers < 100:
        n = rng.randint(1, 6)
        q = random_acyclic_quiver(rng, n)
        for perm in permutations(range(1, n + 1)):
            respects = all(
                q.b[perm[i] - 1][perm[j] - 1] >= 0
                for i in range(n)
                for j in range(i + 1, n)
            )
            if respects:
                orders += 1
                if not verify_sequence(q, MutationSequence(perm), "maximal_green").valid:
                    ok = False
        quivers += 1
    report("every topological order is maximal green", ok,
           f"{orders} orders over {quivers} quivers")


def test_q222_probe():
    start = time.monotonic()
    rep = enumerate_mgs(preset("q222"), SearchConfig(max_len=12))
    code, data = run_cli("search", "--quiver", "q222", "--max-len", "12")
    elapsed = time.monotonic() - start
    ok = (
        rep.count == 0
        and rep.truncated
        and elapsed < 300.0
        and code == 1
        and data["count"] == 0
        and data["truncated"] is True
    )
    report("Q_{2,2,2} has no MGS up to length 12", ok,
           f"{rep.states_visited} states in {elapsed:.3f}s incl. CLI")


def test_subquiver_restriction_on_linear_a3():
    q = linear_quiver(3)
    rep = enumerate_mgs(q, SearchConfig(max_len=10))
    assert not rep.truncated
    subsets = [
        set(s)
        for s in ({1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3})
    ]
    checked = 0
    ok = True
    for seq in rep.sequences:
        for keep in subsets:
            sub, _ = q.full_subquiver(keep)
            try:
                restricted = restrict_mgs(q, seq.without_annotations(), keep)
            except Exception:
                ok = False
                continue
            ok = ok and verify_sequence(sub, restricted, "maximal_green").valid
            checked += 1
    report("subquiver restriction on linear A3", ok,
           f"{checked} (sequence, subquiver) pairs")


def test_rotation_lemma():
    checked = 0
    ok = True
    for q in (linear_quiver(2), linear_quiver(3)):
        rep = enumerate_mgs(q, SearchConfig(max_len=10))
        for seq in rep.sequences:
            new_q, new_seq = rotate(q, seq.without_annotations())
            valid = verify_sequence(new_q, new_seq, "maximal_green").valid
            ok = ok and valid and len(new_seq) == len(seq)
            checked += 1
    report("rotation lemma on A2 and A3", ok, f"{checked} rotations")


def test_brick_hom_oracle_agreement():
    pairs = 0
    ok = True
    for n in range(1, 5):
        for src in all_intervals(n):
            for tgt in all_intervals(n):
                expected = hom_nonzero_oracle((src.a, src.b), (tgt.a, tgt.b), n)
                ok = ok and hom_nonzero(src, tgt) is expected
                pairs += 1
    report("interval Hom criterion matches the linear-algebra oracle", ok,
           f"{pairs} pairs")


def test_brick_chain_cross_validation():
    ok = all(cross_validate(n) for n in (1, 2, 3, 4))
    dims = {c.dimension_vectors(2) for c in enumerate_maximal_chains(2)}
    ok = ok and dims == {((1, 0), (0, 1)), ((0, 1), (1, 1), (1, 0))}
    report("brick chains match MGS c-vectors for n = 1..4", ok)
