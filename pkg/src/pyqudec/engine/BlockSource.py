from typing import List, Tuple

from numpy.typing import NDArray
from numpy.random import default_rng
from numpy import float64, uint8

from pyqudec.channel.Frame import Frame
from pyqudec.codes.FecCode import FecCode
from pyqudec.engine.Problem import Problem
from pyqudec.engine.SeedMixer import SeedMixer
from pyqudec.engine.SeedStream import SeedStream
from pyqudec.channel.AwgnChannel import AwgnChannel
from pyqudec.channel.ReceivedBlock import ReceivedBlock


class BlockSource:
    """
    Random data words sent through encode, BPSK and AWGN. Block ids are ``snr_index * stride + j``
    where j = 0 is the preamble and payload problem i gets j = i + 1.
    """

    __code: FecCode
    __channel: AwgnChannel
    __seeds: SeedMixer
    __stride: int

    def __init__(self, code: FecCode, channel: AwgnChannel, seeds: SeedMixer, stride: int) -> None:
        self.__code = code
        self.__channel = channel
        self.__seeds = seeds
        self.__stride = stride

    @property
    def code(self) -> FecCode:
        return self.__code

    def transmit(
            self,
            data: NDArray[uint8],
            snr_db: float,
            noise_seed: int
    ) -> Tuple[NDArray[uint8], NDArray[float64], NDArray[float64]]:
        codeword: NDArray[uint8] = self.__code.encode(data=data)
        received: NDArray[float64] = self.__channel.awgn_apply(
            symbols=self.__channel.bpsk_modulate(codeword=codeword),
            snr_db=snr_db,
            seed=noise_seed
        )
        return codeword, received, self.__channel.llr_compute(received=received, snr_db=snr_db)

    def problem(self, snr_index: int, snr_db: float, problem_index: int, preamble: bool = False) -> Problem:
        data_stream, noise_stream = (
            (SeedStream.PREAMBLE_DATA, SeedStream.PREAMBLE_NOISE) if preamble
            else (SeedStream.PAYLOAD_DATA, SeedStream.PAYLOAD_NOISE)
        )
        data: NDArray[uint8] = default_rng(
            self.__seeds.seed(snr_index=snr_index, problem_index=problem_index, stream=data_stream)
        ).integers(0, 2, size=self.__code.k).astype(uint8)

        codeword, received, llrs = self.transmit(
            data=data,
            snr_db=snr_db,
            noise_seed=self.__seeds.seed(snr_index=snr_index, problem_index=problem_index, stream=noise_stream)
        )
        block: ReceivedBlock = ReceivedBlock(
            block_id=snr_index * self.__stride + (0 if preamble else problem_index + 1),
            symbols=received,
            llrs=llrs,
            snr_db=snr_db,
            truth=data if preamble else None
        )
        return Problem(snr_index=snr_index, problem_index=problem_index, block=block, data=data, codeword=codeword)

    def frame(self, snr_index: int, snr_db: float, problems: int) -> Tuple[Frame, List[Problem]]:
        preamble: Problem = self.problem(snr_index=snr_index, snr_db=snr_db, problem_index=0, preamble=True)
        payload: List[Problem] = [
            self.problem(snr_index=snr_index, snr_db=snr_db, problem_index=index) for index in range(problems)
        ]
        return (
            Frame(snr_db=snr_db, preamble=[preamble.block], payload=[problem.block for problem in payload]),
            payload
        )
