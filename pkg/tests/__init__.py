# Loja Tests
