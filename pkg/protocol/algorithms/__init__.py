"""Per-player subroutines of the protocol, written as generators"""
from .random_source import UniformArmSampler
from .find_good_arm import (
    find_good_arm, sub_phase_one_length, confirmation_window_length, phase_length, accepts_arm
)
from .rank_assignment import (
    virtual_musical_chairs, virtual_number_players, parking_arm,
    musical_chairs_length, number_players_length
)
from .channel import send_bits, receive_bits, wait
from .exploration import (
    distributed_exploration, com_round, com_leader, com_follow,
    leader_accept_reject, apply_decisions, aggregate_book, confidence_radius,
    pulls_per_arm, exploration_phase_length, com_round_bits
)

__all__ = [
    'UniformArmSampler',
    'find_good_arm',
    'sub_phase_one_length',
    'confirmation_window_length',
    'phase_length',
    'accepts_arm',
    'virtual_musical_chairs',
    'virtual_number_players',
    'parking_arm',
    'musical_chairs_length',
    'number_players_length',
    'send_bits',
    'receive_bits',
    'wait',
    'distributed_exploration',
    'com_round',
    'com_leader',
    'com_follow',
    'leader_accept_reject',
    'apply_decisions',
    'aggregate_book',
    'confidence_radius',
    'pulls_per_arm',
    'exploration_phase_length',
    'com_round_bits'
]
