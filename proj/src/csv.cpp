namespace hml {}
