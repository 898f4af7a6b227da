# Symmetric Chain Decomposition Package
