// Generated by gen_attempts.py. Do not edit.

pub const EXPECTED_ATTEMPTS: &[(usize, f64, f64)] = &[
    (5, 1.0, 1.023034755730859),
    (5, 5.0, 1.2156674110250838),
    (5, 10.0, 1.3140880589456742),
    (5, 50.0, 1.4152860303030805),
    (5, 100.0, 1.4292854249860457),
    (5, 500.0, 1.440694979962074),
    (5, 1000.0, 1.4421342222264102),
    (5, 5000.0, 1.4432876969998669),
    (5, 10000.0, 1.443432011324661),
    (10, 1.0, 1.0054392501019113),
    (10, 5.0, 1.0922131004329467),
    (10, 10.0, 1.1939843885736695),
    (10, 50.0, 1.3667868964885388),
    (10, 100.0, 1.3961392549902098),
    (10, 500.0, 1.4209453843592547),
    (10, 1000.0, 1.4241291823138636),
    (10, 5000.0, 1.4266895153297408),
    (10, 10000.0, 1.4270103879141605),
    (20, 1.0, 1.0013086609529604),
    (20, 5.0, 1.0290192015355887),
    (20, 10.0, 1.0871222509030898),
    (20, 50.0, 1.3029050951600381),
    (20, 100.0, 1.3573782266269519),
    (20, 500.0, 1.4071103023231049),
    (20, 1000.0, 1.413723501345445),
    (20, 5000.0, 1.4190782460850214),
    (20, 10000.0, 1.4197516076580474),
    (40, 1.0, 1.0003200706435196),
    (40, 5.0, 1.0077468319769802),
    (40, 10.0, 1.0282376362572379),
    (40, 50.0, 1.2123275834084652),
    (40, 100.0, 1.2979021209344418),
    (40, 500.0, 1.3903785391102381),
    (40, 1000.0, 1.4036147570272347),
    (40, 5000.0, 1.4144823417001257),
    (40, 10000.0, 1.4158582969096034),
    (100, 1.0, 1.0000504937744012),
    (100, 5.0, 1.001255623594014),
    (100, 10.0, 1.0049406443316573),
    (100, 50.0, 1.0833104019249393),
    (100, 100.0, 1.1772795925928844),
    (100, 500.0, 1.3503840898148078),
    (100, 1000.0, 1.3816457797840176),
    (100, 5000.0, 1.4084494413041527),
    (100, 10000.0, 1.4119141451339899),
];
