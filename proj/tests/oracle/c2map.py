C2 = {'2|0.000000': 2, '3|0.000000': 3, '4|0.000000': 4, '4|0.500000': 4, '4+4|0.500000': 2, '5|0.000000': 5, '6|0.000000': 6, '6|0.500000': 12, '6|0.333333': 18, '6+6|0.500000': 12, '6+3|0.000000': 6, '6+2|0.000000': 6, '7|0.000000': 7, '8+8|0.500000': 8, '8|0.000000': 8, '8|0.500000': 8, '8|0.250000': 16, '9+9|0.333333': 9, '9|0.000000': 9, '9|0.333333': 9, '10+10|0.500000': 20, '10+5|0.000000': 10, '10+2|0.000000': 10, '10|0.000000': 10, '10|0.500000': 20, '10|0.400000': 50, '10|0.200000': 50, '12+|0.500000': 6, '12+12|0.333333': 36, '12+12|0.500000': 12, '12+4|0.000000': 12, '12+4|0.500000': 6, '12+4|0.166667': 18, '12+3|0.000000': 12, '12+3|0.500000': 12, '12|0.000000': 12, '12|0.333333': 36, '12|0.250000': 48, '12|0.500000': 12, '12|0.166667': 36}
