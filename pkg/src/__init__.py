# Loja - exact local Lojasiewicz exponents in two variables
