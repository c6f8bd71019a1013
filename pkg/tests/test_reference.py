import numpy as np
import pytest

from weno_lab.errors import CacheCorruption, ConfigError
from weno_lab.harness import error_norms
from weno_lab.problems import make_problem, riemann_exact_profile
from weno_lab.reference import (ReferenceSolution, cache_path, decode, encode,
                                reference_solution)


def _ref(rng, n=20):
    x = (np.arange(n) + 0.5) / n
    return ReferenceSolution(x, ("rho", "u", "p"), rng.normal(size=(3, n)))


def test_encode_decode_is_bit_exact(rng):
    ref = _ref(rng)
    back = decode(encode(ref))
    assert back.names == ref.names
    assert np.array_equal(back.x, ref.x) and np.array_equal(back.fields, ref.fields)


@pytest.mark.parametrize("mutate", [
    lambda b: b.replace(b"e-0", b"e-1", 1),
    lambda b: b[: b.rindex(b"# checksum")],
    lambda b: b[:-3] + b"00\n",
])
def test_corruption_is_detected(rng, mutate):
    blob = encode(_ref(rng))
    with pytest.raises(CacheCorruption):
        decode(mutate(blob))


def test_sampling_nearest_and_ties():
    x = np.array([0.05, 0.15, 0.25, 0.35])
    ref = ReferenceSolution(x, ("u",), np.array([[1.0, 2.0, 3.0, 4.0]]))
    out = ref.sample(np.array([0.05, 0.11, 0.2, 0.34]))[0]
    np.testing.assert_allclose(out, [1.0, 2.0, 2.5, 4.0])


def test_even_refinement_averages_the_two_fine_cells():
    fine = (np.arange(20) + 0.5) / 20
    ref = ReferenceSolution(fine, ("u",), fine[None, :] ** 2)
    coarse = (np.arange(2) + 0.5) / 2
    out = ref.sample(coarse)[0]
    np.testing.assert_allclose(out, [0.5 * (fine[4] ** 2 + fine[5] ** 2),
                                     0.5 * (fine[14] ** 2 + fine[15] ** 2)])


def test_cache_is_written_once_and_reused(tmp_path):
    spec = make_problem("burgers_sin")
    a = reference_solution(spec, 200, t_end=0.1, cache_dir=tmp_path)
    path = cache_path(spec, 200, 0.1, tmp_path)
    assert path.exists()
    stamp = path.stat().st_mtime_ns
    b = reference_solution(spec, 200, t_end=0.1, cache_dir=tmp_path)
    assert path.stat().st_mtime_ns == stamp
    assert np.array_equal(a.fields, b.fields)
    assert not list(tmp_path.glob("*.tmp"))


def test_corrupt_cache_file_raises(tmp_path):
    spec = make_problem("burgers_sin")
    reference_solution(spec, 200, t_end=0.1, cache_dir=tmp_path)
    path = cache_path(spec, 200, 0.1, tmp_path)
    path.write_bytes(path.read_bytes()[:-5])
    with pytest.raises(CacheCorruption):
        reference_solution(spec, 200, t_end=0.1, cache_dir=tmp_path)


def test_reference_grid_must_be_finer():
    with pytest.raises(ConfigError):
        reference_solution(make_problem("burgers_sin"), 1000, coarse_n=200)
    with pytest.raises(ConfigError):
        reference_solution(make_problem("riemann2d"), 1000)


def test_sod_reference_agrees_with_exact_solution(tmp_path):
    spec = make_problem("sod_modified")
    ref = reference_solution(spec, 2000, cache_dir=tmp_path)
    exact = riemann_exact_profile(spec, ref.x, spec.t_end)[0]
    l1, _ = error_norms(ref.fields[0], exact, ref.x[1] - ref.x[0])
    assert l1 < 2e-3
