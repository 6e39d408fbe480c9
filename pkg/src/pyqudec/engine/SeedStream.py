from enum import IntEnum


class SeedStream(IntEnum):
    PAYLOAD_DATA = 0
    PAYLOAD_NOISE = 1
    PREAMBLE_DATA = 2
    PREAMBLE_NOISE = 3
    RANDOM_INIT = 4
    SHOTS = 5
