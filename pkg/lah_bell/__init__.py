# Lah, r-Lah and λ-analogue r-Lah numbers with exact identity verification
