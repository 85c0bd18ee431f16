from farekit.algebra.constructions import alexander_biquandle, conjugation_biquandle, wada_biquandle
from farekit.algebra.verification import inverse_maps, is_quandle, verify
