from .brute_force import brute_force_path_llr, ml_decode, weight_distribution
