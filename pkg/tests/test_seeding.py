from wager.seeding import MASK64, fnv1a64, mix, run_generator, run_seed, splitmix64, stream_key


def test_fnv1a64_known_values():
    assert fnv1a64(b"") == 0xCBF29CE484222325
    assert fnv1a64(b"a") == 0xAF63DC4C8601EC8C


def test_splitmix64_stays_in_range():
    value = 0
    for _ in range(100):
        value = splitmix64(value)
        assert 0 <= value <= MASK64


def test_mix_accepts_text_and_bytes():
    assert mix("cell") == mix(b"cell")
    assert mix(1, 2) != mix(2, 1)


def test_stream_key_depends_on_p_and_n_only():
    assert stream_key(0.1, 20) == stream_key(0.1, 20)
    assert stream_key(0.1, 20) != stream_key(0.3, 20)
    assert stream_key(0.1, 20) != stream_key(0.1, 30)


def test_run_seeds_differ_per_run():
    cell = stream_key(0.5, 10)
    seeds = {run_seed(20240101, cell, i) for i in range(1000)}
    assert len(seeds) == 1000


def test_run_generator_replays():
    first = run_generator(run_seed(1, 2, 3)).random(5)
    second = run_generator(run_seed(1, 2, 3)).random(5)
    assert list(first) == list(second)
