from app.shared.utils.parallel import parallel_map


class TestParallelMap:
    def test_sequential_keeps_order(self) -> None:
        assert parallel_map(lambda x: x * x, range(5)) == [0, 1, 4, 9, 16]

    def test_threaded_keeps_order(self) -> None:
        assert parallel_map(lambda x: -x, range(20), workers=4) == [-x for x in range(20)]

    def test_empty(self) -> None:
        assert parallel_map(str, [], workers=3) == []
