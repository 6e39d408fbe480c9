from pyqudec.engine.SeedStream import SeedStream


class SeedMixer:
    """
    Per-problem seeds as a splitmix64 chain over (master_seed, snr_index, problem_index, stream):

        state = splitmix64(master_seed)
        state = splitmix64(state ^ index)   for each index in turn

    Every value is reduced modulo 2^64, so the seeds are stable across platforms and worker order.
    """

    MASK: int = (1 << 64) - 1
    GOLDEN_GAMMA: int = 0x9E3779B97F4A7C15

    __master_seed: int

    def __init__(self, master_seed: int) -> None:
        self.__master_seed = master_seed & self.MASK

    @property
    def master_seed(self) -> int:
        return self.__master_seed

    @classmethod
    def splitmix64(cls, value: int) -> int:
        z: int = (value + cls.GOLDEN_GAMMA) & cls.MASK
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & cls.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & cls.MASK
        return z ^ (z >> 31)

    def mix(self, *indices: int) -> int:
        state: int = self.splitmix64(value=self.__master_seed)
        for index in indices:
            state = self.splitmix64(value=state ^ (index & self.MASK))
        return state

    def seed(self, snr_index: int, problem_index: int, stream: SeedStream) -> int:
        return self.mix(snr_index, problem_index, int(stream))
